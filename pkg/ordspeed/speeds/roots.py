from typing import Sequence

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.exceptions import InputError

logger: BoundLogger = get_logger()

TOLERANCE = 1e-12


def _excess(coeffs: Sequence[int], x: float) -> float:
    # x^(k+1) - sum a(i) x^i by Horner
    value = 1.0
    for a in reversed(coeffs):
        value = value * x - a
    return value


def growth_root(
    coeffs: Sequence[int], tolerance: float = TOLERANCE,
) -> float:
    """Unique positive root of x^(k+1) = sum a(i) x^i."""
    if any(a < 0 for a in coeffs):
        raise InputError(
            "coefficients must be nonnegative", token=str(tuple(coeffs)),
        )
    if not any(coeffs):
        raise InputError(
            "some coefficient must be positive", token=str(tuple(coeffs)),
        )
    lo, hi = 1.0, 1.0 + sum(coeffs)
    steps = 0
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if _excess(coeffs, mid) > 0:
            hi = mid
        else:
            lo = mid
        steps += 1
    root = (lo + hi) / 2
    logger.debug("Growth root found", coeffs=tuple(coeffs), root=root,
                 steps=steps)
    return root


def family_coefficients(
    prefix: Sequence[int] = (), length: int = 12,
) -> list[tuple[int, ...]]:
    """prefix, then prefix with 1, 2, ... extra low-order ones."""
    family = []
    ones = 0
    while len(family) < length:
        coeffs = (1,) * ones + tuple(prefix)
        if coeffs:
            family.append(coeffs)
        ones += 1
    return family


def accumulation_family(
    prefix: Sequence[int] = (), length: int = 12,
) -> list[float]:
    """Roots along the family; each extra low-order 1 raises the root."""
    return [growth_root(c) for c in family_coefficients(prefix, length)]


def shifted_family(
    prefix: Sequence[int] = (), length: int = 12,
) -> list[float]:
    """Same family with 1 added to every coefficient."""
    return [
        growth_root(tuple(a + 1 for a in c))
        for c in family_coefficients(prefix, length)
    ]
