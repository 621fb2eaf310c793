from typing import Sequence

from ordspeed.graphs import OrderedGraph, Side
from ordspeed.structures.dto import StructureType
from ordspeed.structures.schemas import StructureWitness


def validate_witness(g: OrderedGraph, w: StructureWitness) -> bool:
    xs = w.xs
    if len(xs) < 2 or len(xs) % 2:
        return False
    if not _in_range(g, xs) or not _increasing(xs):
        return False

    if w.variant == StructureType.TYPE1:
        y = w.y
        if y is None or not _in_range(g, [y]) or w.ys:
            return False
        if w.side == Side.LEFT:
            placed = y < xs[0]
        elif w.side == Side.RIGHT:
            placed = y > xs[-1]
        else:
            placed = False
        if not placed:
            return False
        if (
            w.starts_with_edge is not None
            and w.starts_with_edge != g.adjacent(y, xs[0])
        ):
            return False
        return _alternates([g.adjacent(y, x) for x in xs])

    ys = w.ys
    if len(ys) != len(xs) or not _in_range(g, ys):
        return False
    statuses = [g.adjacent(x, y) for x, y in zip(xs, ys)]

    if w.variant == StructureType.TYPE2A:
        shaped = _increasing(ys) and xs[-1] < ys[0]
    elif w.variant == StructureType.TYPE2B:
        shaped = _increasing(ys[::-1]) and xs[-1] < ys[-1]
    else:
        ell = w.ell
        shaped = (
            ell is not None and ell >= 1
            and all(y - x >= ell for x, y in zip(xs, ys))
            and all(y < x for y, x in zip(ys, xs[1:]))
        )
    return shaped and _alternates(statuses)


def _in_range(g: OrderedGraph, vertices: Sequence[int]) -> bool:
    return all(1 <= v <= g.n for v in vertices)


def _increasing(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def _alternates(bits: Sequence[bool]) -> bool:
    return all(a != b for a, b in zip(bits, bits[1:]))
