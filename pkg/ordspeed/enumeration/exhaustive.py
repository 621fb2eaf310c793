from itertools import combinations
from typing import Iterator

from ordspeed.graphs import OrderedGraph


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_pattern(n: int, pattern: int) -> OrderedGraph:
    """Bit b of ``pattern`` switches the b-th pair in lexicographic order."""
    rows = [0] * n
    for b, (i, j) in enumerate(pair_list(n)):
        if pattern >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return OrderedGraph(n, tuple(rows))


def iter_all_graphs(n: int) -> Iterator[OrderedGraph]:
    for pattern in range(1 << (n * (n - 1) // 2)):
        yield graph_from_pattern(n, pattern)
