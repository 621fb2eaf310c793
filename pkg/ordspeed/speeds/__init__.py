from ordspeed.speeds.bounds import (blocks_upper_bound, geton_lower_bound,
                                    is_supermultiplicative, partition_bound,
                                    remark_speed, structure_speed_bounds)
from ordspeed.speeds.dto import RegimeCase
from ordspeed.speeds.fibonacci import (fib, fib_terms, recurrence_eval,
                                       recurrence_terms)
from ordspeed.speeds.fitting import binomial_value, fit_polynomial
from ordspeed.speeds.regime import classify_regime, empirical_growth
from ordspeed.speeds.roots import (accumulation_family, family_coefficients,
                                   growth_root, shifted_family)
from ordspeed.speeds.schemas import (GrowthReport, PolynomialFit, Recurrence,
                                     RegimeClassification)
