from math import comb
from typing import Optional, Sequence, Union

from ordspeed.decomposition import partition_count_bound
from ordspeed.enumeration import SpeedSequence
from ordspeed.exceptions import InputError
from ordspeed.speeds.fibonacci import fib
from ordspeed.speeds.fitting import exact_values


def _check_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise InputError(f"{name} must be nonnegative", token=str(value))


def remark_speed(n: int, k: int) -> int:
    """Graphs on [n] with at most k disjoint edges, all of length one."""
    _check_nonnegative(n=n, k=k)
    return sum(comb(n - i, i) for i in range(k + 1) if n - i >= 0)


def blocks_upper_bound(n: int, k: int, m: int) -> int:
    """Upper bound on the block sequences with sum_{i >= k+2} t_i <= m.

    Only the block-sequence factor of the speed bound: the graphs sharing
    one block sequence are not counted here.
    """
    _check_nonnegative(n=n, k=k, m=m)
    return (
        (k + m + 1) * comb(k + m + 1, k + 1)
        * 2 ** (2 * m + k) * comb(n + k, k)
    )


def geton_lower_bound(n: int, k: int) -> int:
    """Speed floor once some member has k + 1 blocks of size at least n."""
    _check_nonnegative(n=n, k=k)
    top = n - 3 * k - 2
    return comb(top, k) if top >= 0 else 0


def partition_bound(k: int) -> int:
    return partition_count_bound(k)


def structure_speed_bounds(n: int, ell: int) -> tuple[int, int]:
    """Speed floors forced by unbounded Type 1/2 and Type 3 structures."""
    if n < 1 or ell < 1:
        raise InputError("n and ell must be positive", token=f"{n} {ell}")
    return 1 << (n - 1), fib(n, ell + 1)


def is_supermultiplicative(
    seq: Union[SpeedSequence, Sequence[int]],
) -> Optional[tuple[int, int]]:
    """First (m, n) with |P_(m+n)| < |P_m| |P_n|, or None."""
    values = exact_values(seq)
    size = len(values)
    for total in range(2, size + 1):
        for m in range(1, total // 2 + 1):
            n = total - m
            if values[total - 1] < values[m - 1] * values[n - 1]:
                return m, n
    return None
