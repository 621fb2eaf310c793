from typing import Sequence, Union

from ordspeed.exceptions import InputError
from ordspeed.speeds.schemas import Recurrence


def fib_terms(n: int, k: int) -> list[int]:
    """F_{0,k}, ..., F_{n,k}."""
    if k < 1:
        raise InputError("Fibonacci order must be positive", token=str(k))
    terms = [1]
    for i in range(1, n + 1):
        terms.append(sum(terms[max(0, i - k):i]))
    return terms


def fib(n: int, k: int) -> int:
    if n < 0:
        if k < 1:
            raise InputError(
                "Fibonacci order must be positive", token=str(k),
            )
        return 0
    return fib_terms(n, k)[n]


def recurrence_terms(
    r: Union[Recurrence, Sequence[int]], n: int,
) -> list[int]:
    """T_0, ..., T_n."""
    if not isinstance(r, Recurrence):
        r = Recurrence(coeffs=tuple(r))
    # weight of T_(i-1-t) is a(k-t)
    weights = r.coeffs[::-1]
    terms = [1]
    for i in range(1, n + 1):
        terms.append(sum(
            w * terms[i - 1 - t]
            for t, w in enumerate(weights) if i - 1 - t >= 0
        ))
    return terms


def recurrence_eval(r: Union[Recurrence, Sequence[int]], n: int) -> int:
    if n < 0:
        return 0
    return recurrence_terms(r, n)[n]
