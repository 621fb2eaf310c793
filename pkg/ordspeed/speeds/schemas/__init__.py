from ordspeed.speeds.schemas.recurrence import Recurrence
from ordspeed.speeds.schemas.regime import (GrowthReport, PolynomialFit,
                                            RegimeClassification)
