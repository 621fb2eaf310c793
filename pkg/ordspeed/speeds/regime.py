from math import exp, log
from typing import Optional, Sequence, Union

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.enumeration import SpeedSequence
from ordspeed.exceptions import InputError
from ordspeed.speeds.dto import RegimeCase
from ordspeed.speeds.fibonacci import fib_terms
from ordspeed.speeds.fitting import exact_values, fit_polynomial
from ordspeed.speeds.schemas import GrowthReport, RegimeClassification

logger: BoundLogger = get_logger()

MIN_ENTRIES = 6
MAX_FIB_ORDER = 8
MAX_RATIO_DEGREE = 6
RATIO_SLACK = 1e-9


def classify_regime(
    seq: Union[SpeedSequence, Sequence[int]],
    max_k: int = MAX_FIB_ORDER,
    max_degree: int = MAX_RATIO_DEGREE,
) -> RegimeClassification:
    """Evidence for which speed regime a finite sequence sits in.

    Cases are tried in order: a constant tail, then a polynomial fit. A
    Fibonacci order is only sought when some value falls below 2^(n-1);
    a sequence at or above 2^(n-1) at every n is reported exponential,
    even though F(n, k) also lies below it for every k.
    """
    values = exact_values(seq)
    if len(values) < MIN_ENTRIES:
        raise InputError(
            f"need at least {MIN_ENTRIES} exact entries",
            token=str(len(values)),
        )
    size = len(values)
    notes = ["heuristic: finite data is evidence, not proof"]

    tail = values[-(-size // 3):]
    if len(set(tail)) == 1:
        notes.append(f"tail of {len(tail)} entries is constant")
        return RegimeClassification(
            case=RegimeCase.CONSTANT, constant=tail[0], diagnostics=notes,
        )
    notes.append("tail is not constant")

    fit = fit_polynomial(values)
    if fit is not None:
        notes.append(
            f"degree {fit.degree} differences vanish from n={fit.onset}",
        )
        return RegimeClassification(
            case=RegimeCase.POLYNOMIAL, coefficients=fit.coefficients,
            onset=fit.onset, diagnostics=notes,
        )
    notes.append("no polynomial fit")

    powers = [1 << (n - 1) for n in range(1, size + 1)]
    if any(v < p for v, p in zip(values, powers)):
        for k in range(max_k, 1, -1):
            fibs = fib_terms(size, k)[1:]
            if any(v < f for v, f in zip(values, fibs)):
                continue
            degree = _ratio_degree(values, fibs, max_degree)
            if degree is None:
                notes.append(f"F(n,{k}) <= seq but ratio grows too fast")
                continue
            notes.append(
                f"F(n,{k}) <= seq with ratio bounded by n^{degree}",
            )
            return RegimeClassification(
                case=RegimeCase.FIBONACCI, k=k, ratio_degree=degree,
                diagnostics=notes,
            )
        notes.append("no Fibonacci order fits")
    else:
        notes.append("seq reaches 2^(n-1) everywhere")
        return RegimeClassification(
            case=RegimeCase.EXPONENTIAL, window=(1, size), diagnostics=notes,
        )

    logger.info("Regime inconclusive", entries=size)
    return RegimeClassification(
        case=RegimeCase.INCONCLUSIVE, diagnostics=notes,
    )


def _ratio_degree(
    values: list[int], fibs: list[int], max_degree: int,
) -> Optional[int]:
    """Least d with seq_n / F_n / n^d not growing across the tail."""
    start = len(values) // 2
    half = (len(values) - start) // 2
    for degree in range(max_degree + 1):
        scaled = [
            values[i] / fibs[i] / (i + 1) ** degree
            for i in range(start, len(values))
        ]
        early, late = scaled[:half], scaled[half:]
        if not early or max(late) <= max(early) * (1 + RATIO_SLACK):
            return degree
    return None


def empirical_growth(
    seq: Union[SpeedSequence, Sequence[int]],
) -> GrowthReport:
    values = exact_values(seq)
    if not values:
        raise InputError("sequence is empty", token="[]")
    for n, value in enumerate(values, start=1):
        if value <= 0:
            raise InputError(
                f"entry {n} must be positive", token=str(value),
            )
    first = len(values) // 2 + 1
    roots = [
        exp(log(values[n - 1]) / n) for n in range(first, len(values) + 1)
    ]
    ratios = [
        values[n] / values[n - 1] for n in range(first, len(values))
    ]
    fitted = None
    if len(ratios) >= 3:
        last = ratios[-3:]
        if max(last) - min(last) <= 1e-3 * last[-1]:
            fitted = last[-1]
    return GrowthReport(
        first_n=first, nth_roots=roots, ratios=ratios, fitted_root=fitted,
    )
