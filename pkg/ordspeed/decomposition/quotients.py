from typing import Optional, Sequence

from ordspeed.decomposition.homogeneity import (block_sequence,
                                                homogeneous_blocks,
                                                is_l_homogeneous)
from ordspeed.decomposition.schemas import BlockPartition, BoundFunction
from ordspeed.exceptions import (ContractViolation, InputError,
                                 PreconditionError)
from ordspeed.graphs import LoopedOrderedGraph, OrderedGraph


def quotient(g: OrderedGraph, p: BlockPartition) -> LoopedOrderedGraph:
    _check_cover(g, p)
    for block in p.blocks:
        if not is_l_homogeneous(g, block, 1):
            raise ContractViolation(
                f"block {list(block)} is not homogeneous",
            )
    m = len(p.blocks)
    rows = [0] * m
    for i, (start_i, stop_i) in enumerate(p.blocks):
        if stop_i > start_i and g.adjacent(start_i, start_i + 1):
            rows[i] |= 1 << i
        for j in range(i + 1, m):
            if g.adjacent(start_i, p.blocks[j][0]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return LoopedOrderedGraph(m, tuple(rows))


def k_type_graph(
    g: OrderedGraph, k: int,
) -> tuple[LoopedOrderedGraph, BlockPartition]:
    """Quotient over the k largest homogeneous blocks, every other vertex
    kept as a singleton."""
    if k < 1:
        raise InputError("k must be positive", token=str(k))
    t = block_sequence(g)
    if t.at(k) == t.at(k + 1):
        raise PreconditionError(
            f"k-blocks are not determined: t_{k} = t_{k + 1} = {t.at(k)}",
        )
    threshold = t.at(k)
    blocks: list[tuple[int, int]] = []
    for start, stop in homogeneous_blocks(g).blocks:
        if stop - start + 1 >= threshold:
            blocks.append((start, stop))
        else:
            blocks.extend((v, v) for v in range(start, stop + 1))
    partition = BlockPartition(ell=1, blocks=blocks)
    return quotient(g, partition), partition


def companion_graph(g: OrderedGraph, p: BlockPartition) -> OrderedGraph:
    """Graph constant on the blocks of ``p`` that agrees with ``g`` on
    every pair of length at least p.ell."""
    _check_cover(g, p)
    ell = p.ell
    for block in p.blocks:
        if not is_l_homogeneous(g, block, ell):
            raise ContractViolation(
                f"block {list(block)} is not {ell}-homogeneous",
            )
    rows = [0] * g.n
    for i, (start_i, stop_i) in enumerate(p.blocks):
        for start_j, stop_j in p.blocks[i:]:
            long_pairs = [
                (x, y)
                for x in range(start_i, stop_i + 1)
                for y in range(max(start_j, x + ell), stop_j + 1)
            ]
            if not long_pairs:
                continue
            if not all(g.adjacent(x, y) for x, y in long_pairs):
                continue
            for x in range(start_i, stop_i + 1):
                for y in range(start_j, stop_j + 1):
                    if x != y:
                        rows[x - 1] |= 1 << (y - 1)
                        rows[y - 1] |= 1 << (x - 1)
    return OrderedGraph(g.n, tuple(rows))


def find_comparable_pair(
    fs: Sequence[BoundFunction],
) -> Optional[tuple[int, int]]:
    """1-based (i, j), i != j, with fs[i] <= fs[j] pointwise."""
    if len({f.m for f in fs}) > 1:
        raise InputError(
            "bound functions need a common domain",
            token=str(sorted({f.m for f in fs})),
        )
    for i, f in enumerate(fs):
        for j, other in enumerate(fs):
            if i != j and f.at_most(other):
                return i + 1, j + 1
    return None


def _check_cover(g: OrderedGraph, p: BlockPartition) -> None:
    if p.n != g.n:
        raise InputError(
            "partition does not cover the graph", token=f"{p.n} != {g.n}",
        )
