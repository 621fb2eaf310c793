from itertools import combinations
from typing import Sequence

from ordspeed.exceptions import InputError
from ordspeed.graphs.dto import GraphKind, Orientation, Side
from ordspeed.graphs.operations import induced, power
from ordspeed.graphs.ordered_graph import OrderedGraph
from ordspeed.graphs.schemas import Permutation

FIXED_ORDERS = {
    GraphKind.Q1: 4,
    GraphKind.Q2: 4,
    GraphKind.H1: 3,
    GraphKind.H2: 3,
}


def gen_basic(kind: GraphKind, n: int = 1) -> OrderedGraph:
    kind = GraphKind(kind)
    if kind in FIXED_ORDERS:
        n = FIXED_ORDERS[kind]
    if n < 1:
        raise InputError("order must be positive", token=str(n))

    if kind in (GraphKind.K, GraphKind.J1):
        edges = list(combinations(range(1, n + 1), 2))
    elif kind == GraphKind.E:
        edges = []
    elif kind == GraphKind.J2:
        if n < 2:
            raise InputError("J2 needs order at least 2", token=str(n))
        edges = [(1, n)]
    elif kind == GraphKind.J3:
        edges = [(1, i) for i in range(2, n + 1)]
    elif kind == GraphKind.J4:
        edges = [(i, n) for i in range(1, n)]
    elif kind == GraphKind.L:
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == GraphKind.Q1:
        edges = [(1, 3), (2, 4)]
    elif kind == GraphKind.Q2:
        edges = [(1, 4), (2, 3)]
    elif kind == GraphKind.H1:
        edges = [(1, 2), (2, 3)]
    else:
        edges = [(1, 3)]
    return OrderedGraph.from_edges(n, edges)


def gen_M(
    bits: Sequence[int], m: int,
    orientation: Orientation = Orientation.INCREASING,
) -> OrderedGraph:
    """Matched pairs x_i y_i on 2m vertices.

    ``bits`` switch, in order, the clique on X, the pairs x_i y_j with
    i < j, the pairs x_i y_j with i > j and the clique on Y; x_i y_i is an
    edge iff i is odd.
    """
    if len(bits) != 4 or any(bit not in (0, 1) for bit in bits):
        raise InputError("I must be four 0/1 values", token=str(bits))
    if m < 1:
        raise InputError("m must be positive", token=str(m))
    x_clique, x_before_y, x_after_y, y_clique = bits
    orientation = Orientation(orientation)

    def y_vertex(i: int) -> int:
        if orientation == Orientation.INCREASING:
            return m + i
        return 2 * m + 1 - i

    edges = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i < j:
                if x_clique:
                    edges.append((i, j))
                if y_clique:
                    edges.append(tuple(sorted((y_vertex(i), y_vertex(j)))))
            if (
                (i < j and x_before_y)
                or (i > j and x_after_y)
                or (i == j and i % 2 == 1)
            ):
                edges.append((i, y_vertex(j)))
    return OrderedGraph.from_edges(2 * m, edges)


def gen_M_subset_image(n: int, subset: Sequence[int]) -> list[int]:
    """Vertices of the increasing M graph with m = n^2 + n whose induced
    graph encodes the even-sized ``subset`` of 1..n as a matching."""
    chosen = sorted(set(subset))
    if len(chosen) != len(subset) or len(chosen) % 2:
        raise InputError("subset must have even size", token=str(subset))
    if chosen and (chosen[0] < 1 or chosen[-1] > n):
        raise InputError("subset must lie in 1..n", token=str(subset))
    m = n * n + n
    half = len(chosen) // 2
    s = [0] + chosen[:half]
    t = chosen[half:] + [n + 1]
    # s_{half+1} is the first t
    s.append(t[0])

    xs: list[int] = []
    ys: list[int] = []
    for j in range(1, half + 1):
        i = 2 * j * n - 1
        xs.append(i)
        ys.append(i)
    for j in range(1, half + 2):
        start = (2 * j - 1) * n + 1
        xs.extend(range(start, start + s[j] - s[j - 1] - 1))
    for j in range(1, half + 1):
        start = 2 * j * n + 1
        ys.extend(range(start, start + t[j] - t[j - 1] - 1))
    if any(i > m for i in xs + ys):
        raise InputError("subset does not fit the host", token=str(subset))
    return sorted(xs + [m + i for i in ys])


def gen_permutation_graph(perm: Permutation) -> OrderedGraph:
    values = perm.values
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(len(values)), 2)
        if values[i] > values[j]
    ]
    return OrderedGraph.from_edges(len(values), edges)


def somebases_body(a: Sequence[int]) -> list[int]:
    """Clique sizes of one body copy, left to right."""
    _check_somebases(a)
    k = len(a) - 1
    sizes = [k + 1] * a[0]
    for i in range(1, k + 1):
        sizes.extend([k + 1 - i] * (a[i] - a[i - 1]))
    return sizes


def gen_somebases_prefix(a: Sequence[int], length: int) -> OrderedGraph:
    """First ``length`` vertices of the infinite graph built from the
    nondecreasing sequence ``a``: a header of a(k) vertices followed by
    copies of the clique sum H, header vertex i seeing the body vertices
    whose position in their copy is past the first i - 1 cliques."""
    sizes = somebases_body(a)
    header = a[-1]
    if length < header:
        raise InputError(
            "prefix must cover the header", token=str(length),
        )
    d = sum(sizes)
    offsets = [0]
    for size in sizes:
        offsets.append(offsets[-1] + size)

    rows = [0] * length
    # body cliques
    start = header
    while start < length:
        for size in sizes:
            stop = min(start + size, length)
            mask = ((1 << stop) - 1) & ~((1 << start) - 1)
            for v in range(start, stop):
                rows[v] |= mask & ~(1 << v)
            start += size
            if start >= length:
                break
    # header to body
    for i in range(1, header + 1):
        low = offsets[i - 1] + 1
        for j in range(header + 1, length + 1):
            residue = (j - header - 1) % d + 1
            if low <= residue <= d:
                rows[i - 1] |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
    return OrderedGraph(length, tuple(rows))


def _check_somebases(a: Sequence[int]) -> None:
    if not a:
        raise InputError("coefficient sequence is empty")
    if any(value < 1 for value in a):
        raise InputError("coefficients must be positive", token=str(a))
    if any(x > y for x, y in zip(a, a[1:])):
        raise InputError("coefficients must be nondecreasing", token=str(a))


def gen_type1_host(k: int, side: Side = Side.LEFT) -> OrderedGraph:
    """A lone vertex y and 2k vertices whose adjacency to y alternates,
    starting with an edge."""
    if k < 1:
        raise InputError("k must be positive", token=str(k))
    side = Side(side)
    if side == Side.LEFT:
        y, first = 1, 2
    else:
        y, first = 2 * k + 1, 1
    edges = [
        tuple(sorted((y, first + i))) for i in range(0, 2 * k, 2)
    ]
    return OrderedGraph.from_edges(2 * k + 1, edges)


def type1_subgraph_family(
    g: OrderedGraph, y: int, xs: Sequence[int], n: int,
) -> list[OrderedGraph]:
    """One n-vertex graph per subset S of 1..n-1, indexed by bitmask: y
    with x_{2s-1} for s in S and x_{2s} for s outside S."""
    if n < 1:
        raise InputError("n must be positive", token=str(n))
    if len(xs) < 2 * (n - 1):
        raise InputError("not enough alternating vertices", token=str(n))
    if xs and (y >= xs[0] or not g.adjacent(y, xs[0])):
        raise InputError(
            "y must precede the run and see its first vertex", token=str(y),
        )
    family = []
    for mask in range(1 << (n - 1)):
        picked = [
            xs[2 * s] if mask >> s & 1 else xs[2 * s + 1]
            for s in range(n - 1)
        ]
        family.append(induced(g, [y] + picked))
    return family


def gen_type3_host(ell: int, s: int) -> OrderedGraph:
    """s blocks x z_1 .. z_{ell-1} y, each joined only by the edge xy."""
    if ell < 1:
        raise InputError("ell must be positive", token=str(ell))
    return power(gen_basic(GraphKind.J2, ell + 1), s)
