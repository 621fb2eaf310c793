from typing import Sequence

from ordspeed.exceptions import InputError
from ordspeed.graphs.ordered_graph import MAX_ORDER, OrderedGraph


def make_graph(n: int, edges: Sequence[tuple[int, int]]) -> OrderedGraph:
    return OrderedGraph.from_edges(n, edges)


def complement(g: OrderedGraph) -> OrderedGraph:
    full = (1 << g.n) - 1
    return OrderedGraph(
        g.n,
        tuple(~row & full & ~(1 << i) for i, row in enumerate(g.rows)),
    )


def induced(g: OrderedGraph, vertices: Sequence[int]) -> OrderedGraph:
    if not vertices:
        raise InputError("induced subgraph needs at least one vertex")
    previous = 0
    for v in vertices:
        if v <= previous:
            raise InputError(
                "vertex subset must be strictly increasing", token=str(v),
            )
        if v > g.n:
            raise InputError("vertex out of range", token=str(v))
        previous = v
    return OrderedGraph(len(vertices), induced_rows(g.rows, vertices))


def induced_rows(
    rows: Sequence[int], vertices: Sequence[int],
) -> tuple[int, ...]:
    """Rows of the subgraph on the 1-based, increasing ``vertices``."""
    shifts = [v - 1 for v in vertices]
    result = []
    for v in vertices:
        row = rows[v - 1]
        new_row = 0
        for q, shift in enumerate(shifts):
            if row >> shift & 1:
                new_row |= 1 << q
        result.append(new_row)
    return tuple(result)


def graph_sum(parts: Sequence[OrderedGraph]) -> OrderedGraph:
    if not parts:
        raise InputError("sum needs at least one graph")
    total = sum(part.n for part in parts)
    if total > MAX_ORDER:
        raise InputError(
            f"sum exceeds the order limit {MAX_ORDER}", token=str(total),
        )
    rows: list[int] = []
    offset = 0
    for part in parts:
        rows.extend(row << offset for row in part.rows)
        offset += part.n
    return OrderedGraph(total, tuple(rows))


def power(g: OrderedGraph, k: int) -> OrderedGraph:
    if k < 1:
        raise InputError("power needs k >= 1", token=str(k))
    return graph_sum([g] * k)


def symmetric_difference(g: OrderedGraph, h: OrderedGraph) -> OrderedGraph:
    if g.n != h.n:
        raise InputError(
            "symmetric difference needs equal orders",
            token=f"{g.n} != {h.n}",
        )
    return OrderedGraph(
        g.n, tuple(a ^ b for a, b in zip(g.rows, h.rows)),
    )


def canonical_key(g: OrderedGraph) -> bytes:
    return key_from_rows(g.n, g.rows)


def key_from_rows(n: int, rows: Sequence[int]) -> bytes:
    """Order prefix followed by the upper triangle, row after row.

    Within a row the nearest later vertex is the least significant bit,
    which keeps the packing a pair of shifts per row.
    """
    acc = 0
    for i in range(n):
        acc = (acc << (n - i - 1)) | (rows[i] >> (i + 1))
    width = (n * (n - 1) // 2 + 7) // 8
    return n.to_bytes(2, "big") + acc.to_bytes(width, "big")
