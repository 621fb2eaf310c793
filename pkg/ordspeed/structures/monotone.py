from bisect import bisect_left
from typing import Sequence

from ordspeed.exceptions import InputError
from ordspeed.structures.schemas import MonotoneRun


def longest_monotone(seq: Sequence[int]) -> tuple[MonotoneRun, MonotoneRun]:
    """Longest strictly increasing and strictly decreasing subsequences."""
    if len(set(seq)) != len(seq):
        raise InputError("values must be distinct", token=str(list(seq)))
    increasing = _longest_increasing(list(seq))
    decreasing = _longest_increasing([-value for value in seq])
    return (
        MonotoneRun(
            length=len(increasing),
            indices=increasing,
            values=[seq[i] for i in increasing],
        ),
        MonotoneRun(
            length=len(decreasing),
            indices=decreasing,
            values=[seq[i] for i in decreasing],
        ),
    )


def _longest_increasing(seq: list[int]) -> list[int]:
    # patience sorting: tails[j] ends the best run of length j + 1
    tails: list[int] = []
    tail_index: list[int] = []
    parent = [-1] * len(seq)
    for i, value in enumerate(seq):
        j = bisect_left(tails, value)
        if j > 0:
            parent[i] = tail_index[j - 1]
        if j == len(tails):
            tails.append(value)
            tail_index.append(i)
        else:
            tails[j] = value
            tail_index[j] = i
    if not tail_index:
        return []
    run = []
    i = tail_index[-1]
    while i != -1:
        run.append(i)
        i = parent[i]
    run.reverse()
    return run
