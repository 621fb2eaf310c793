from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Union

from ordspeed.enumeration import SpeedSequence
from ordspeed.speeds.schemas import PolynomialFit

VANISHING_WINDOW = 3


def exact_values(seq: Union[SpeedSequence, Sequence[int]]) -> list[int]:
    if isinstance(seq, SpeedSequence):
        return seq.exact_prefix()
    return list(seq)


def differences(values: Sequence[int]) -> list[int]:
    return [b - a for a, b in zip(values, values[1:])]


def binomial_value(coefficients: Sequence[int], n: int) -> int:
    return sum(a * comb(n, i) for i, a in enumerate(coefficients))


def _extrapolate(points: list[tuple[int, int]], x: int) -> int:
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return int(total)


def fit_polynomial(
    seq: Union[SpeedSequence, Sequence[int]],
) -> Optional[PolynomialFit]:
    """Smallest-degree integer polynomial matching the tail of ``seq``
    (indexed from n = 1), in the binomial basis, with its onset."""
    values = exact_values(seq)
    size = len(values)
    current = values
    for degree in range(size // 2 + 1):
        current = differences(current)
        if len(current) < VANISHING_WINDOW:
            return None
        if any(current[-VANISHING_WINDOW:]):
            continue

        # the last degree + 1 points pin the polynomial down
        points = [
            (n, values[n - 1])
            for n in range(size - degree, size + 1)
        ]
        at = [_extrapolate(points, x) for x in range(degree + 1)]
        coefficients = []
        for _ in range(degree + 1):
            coefficients.append(at[0])
            at = differences(at)

        onset = size
        while onset > 1 and binomial_value(
                coefficients, onset - 1) == values[onset - 2]:
            onset -= 1
        return PolynomialFit(coefficients=coefficients, onset=onset)
    return None
