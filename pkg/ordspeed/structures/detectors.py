from typing import Optional, Sequence

from ordspeed.exceptions import InputError
from ordspeed.graphs import OrderedGraph, Side
from ordspeed.structures.dto import StructureType
from ordspeed.structures.schemas import Detection, StructureWitness

Pair = tuple[int, int]


def alternating_heads(g: OrderedGraph, y: int, vertices: Sequence[int]):
    """First vertex of every maximal run of equal adjacency to y."""
    heads = []
    previous = None
    for v in vertices:
        bit = g.adjacent(y, v)
        if bit != previous:
            heads.append(v)
            previous = bit
    return heads


def type1_witness(
    g: OrderedGraph, y: int, vertices: Sequence[int], k: int,
) -> Optional[StructureWitness]:
    heads = alternating_heads(g, y, vertices)
    if len(heads) < 2 * k or k < 1:
        return None
    xs = heads[:2 * k]
    return StructureWitness(
        variant=StructureType.TYPE1,
        y=y,
        xs=xs,
        side=Side.LEFT if y < xs[0] else Side.RIGHT,
        starts_with_edge=g.adjacent(y, xs[0]),
    )


def max_type1_k(g: OrderedGraph) -> Detection:
    best_k = 0
    best = None
    for y in range(1, g.n + 1):
        for vertices in (range(y + 1, g.n + 1), range(1, y)):
            k = len(alternating_heads(g, y, vertices)) // 2
            if k > best_k:
                best_k = k
                best = (y, vertices)
    if best is None:
        return Detection(k=0)
    y, vertices = best
    return Detection(k=best_k, witness=type1_witness(g, y, vertices, best_k))


def max_type2_k(g: OrderedGraph) -> Detection:
    best_length = 0
    best_chain: list[Pair] = []
    best_variant = StructureType.TYPE2A
    for p in range(1, g.n):
        for variant in (StructureType.TYPE2A, StructureType.TYPE2B):
            chain = _longest_type2_chain(
                g, p, decreasing=variant == StructureType.TYPE2B,
            )
            if len(chain) > best_length:
                best_length = len(chain)
                best_chain = chain
                best_variant = variant
    k = best_length // 2
    if k == 0:
        return Detection(k=0)
    chain = best_chain[:2 * k]
    return Detection(
        k=k,
        witness=StructureWitness(
            variant=best_variant,
            xs=[x for x, _ in chain],
            ys=[y for _, y in chain],
        ),
    )


def _longest_type2_chain(
    g: OrderedGraph, p: int, decreasing: bool,
) -> list[Pair]:
    """Alternating chain of pairs x <= p < y, x's increasing and y's
    increasing (or decreasing)."""
    columns = list(range(p + 1, g.n + 1))
    if decreasing:
        columns.reverse()
    # status -> column -> (length, pair); earlier rows only
    best_col: dict[int, dict[int, tuple[int, Pair]]] = {0: {}, 1: {}}
    parent: dict[Pair, Optional[Pair]] = {}
    best: tuple[int, Optional[Pair]] = (0, None)
    for x in range(1, p + 1):
        running: dict[int, tuple[int, Optional[Pair]]] = {
            0: (0, None), 1: (0, None),
        }
        row = []
        for y in columns:
            status = int(g.adjacent(x, y))
            length, previous = running[1 - status]
            row.append((y, status, length + 1, previous))
            for t in (0, 1):
                seen = best_col[t].get(y)
                if seen is not None and seen[0] > running[t][0]:
                    running[t] = seen
        for y, status, length, previous in row:
            parent[(x, y)] = previous
            seen = best_col[status].get(y)
            if seen is None or length > seen[0]:
                best_col[status][y] = (length, (x, y))
            if length > best[0]:
                best = (length, (x, y))
    return _unwind(parent, best[1])


def max_type3_k(g: OrderedGraph, ell: int) -> Detection:
    if ell < 1:
        raise InputError("ell must be positive", token=str(ell))
    n = g.n
    # status -> best chain ending exactly at column y
    best_end: dict[int, list[tuple[int, Optional[Pair]]]] = {
        0: [(0, None)] * (n + 2), 1: [(0, None)] * (n + 2),
    }
    prefix: dict[int, tuple[int, Optional[Pair]]] = {
        0: (0, None), 1: (0, None),
    }
    parent: dict[Pair, Optional[Pair]] = {}
    best: tuple[int, Optional[Pair]] = (0, None)
    for x in range(1, n + 1):
        # every chain ending before x is final by now
        for t in (0, 1):
            if best_end[t][x - 1][0] > prefix[t][0]:
                prefix[t] = best_end[t][x - 1]
        for y in range(x + ell, n + 1):
            status = int(g.adjacent(x, y))
            length, previous = prefix[1 - status]
            length += 1
            parent[(x, y)] = previous
            if length > best_end[status][y][0]:
                best_end[status][y] = (length, (x, y))
            if length > best[0]:
                best = (length, (x, y))
    chain = _unwind(parent, best[1])
    k = len(chain) // 2
    if k == 0:
        return Detection(k=0)
    chain = chain[:2 * k]
    return Detection(
        k=k,
        witness=StructureWitness(
            variant=StructureType.TYPE3,
            xs=[x for x, _ in chain],
            ys=[y for _, y in chain],
            ell=ell,
        ),
    )


def _unwind(
    parent: dict[Pair, Optional[Pair]], last: Optional[Pair],
) -> list[Pair]:
    chain = []
    while last is not None:
        chain.append(last)
        last = parent[last]
    chain.reverse()
    return chain
