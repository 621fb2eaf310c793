from typing import Optional

from ordspeed.graphs.ordered_graph import OrderedGraph


def find_embedding(
    h: OrderedGraph, g: OrderedGraph,
) -> Optional[tuple[int, ...]]:
    """A strictly increasing map from ``h`` into ``g`` preserving edges and
    non-edges, as the 1-based images of h's vertices, or None."""
    images = _search(h.rows, h.n, g.rows, g.n, pin_last=False)
    if images is None:
        return None
    return tuple(v + 1 for v in images)


def contains(h: OrderedGraph, g: OrderedGraph) -> bool:
    if h.n > g.n:
        return False
    return _search(h.rows, h.n, g.rows, g.n, pin_last=False) is not None


def contains_through_last(h: OrderedGraph, g: OrderedGraph) -> bool:
    """Like ``contains`` but only embeddings sending h's last vertex to
    g's last vertex count."""
    if h.n > g.n:
        return False
    return _search(h.rows, h.n, g.rows, g.n, pin_last=True) is not None


def _search(
    hrows: tuple[int, ...], h: int,
    grows: tuple[int, ...], g: int,
    pin_last: bool,
) -> Optional[list[int]]:
    if h == 0:
        return []
    images = [0] * h
    free = h
    limit = g
    pin_row = 0
    if pin_last:
        images[h - 1] = g - 1
        free = h - 1
        limit = g - 1
        pin_row = grows[g - 1]
        if free == 0:
            return images
    h_last = hrows[h - 1]

    def extend(p: int, lowest: int) -> bool:
        if p == free:
            return True
        # room must remain for the free - p - 1 later vertices
        highest = limit - (free - p)
        if highest < lowest:
            return False
        candidates = ((1 << (highest + 1)) - 1) & ~((1 << lowest) - 1)
        for q in range(p):
            row = grows[images[q]]
            candidates &= row if hrows[q] >> p & 1 else ~row
        if pin_last:
            candidates &= pin_row if h_last >> p & 1 else ~pin_row
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            images[p] = v
            if extend(p + 1, v + 1):
                return True
            candidates ^= low
        return False

    if extend(0, 0):
        return images
    return None
