from ordspeed.decomposition.schemas import BlockPartition, BlockSequence
from ordspeed.exceptions import InputError
from ordspeed.graphs import OrderedGraph


def partition_count_bound(k: int) -> int:
    """Block count a partition must stay within for structure size k."""
    return 256 * k ** 4


def equivalent(g: OrderedGraph, x: int, y: int, ell: int) -> bool:
    """x ~_ell y: equal neighbourhoods outside the two radius-ell windows."""
    window = _window(g.n, x, ell) | _window(g.n, y, ell)
    return g.rows[x - 1] & ~window == g.rows[y - 1] & ~window


def _window(n: int, x: int, ell: int) -> int:
    low = max(1, x - ell + 1)
    high = min(n, x + ell - 1)
    return ((1 << high) - 1) & ~((1 << (low - 1)) - 1)


def homogeneous_blocks(g: OrderedGraph) -> BlockPartition:
    blocks = []
    start = 1
    for x in range(1, g.n):
        if not equivalent(g, x, x + 1, 1):
            blocks.append((start, x))
            start = x + 1
    blocks.append((start, g.n))
    return BlockPartition(ell=1, blocks=blocks)


def block_sequence(g: OrderedGraph) -> BlockSequence:
    sizes = homogeneous_blocks(g).sizes()
    return BlockSequence(t=sorted(sizes, reverse=True))


def is_l_homogeneous(
    g: OrderedGraph, interval: tuple[int, int], ell: int,
) -> bool:
    start, stop = interval
    if ell < 1:
        raise InputError("ell must be positive", token=str(ell))
    if not 1 <= start <= stop <= g.n:
        raise InputError("interval out of range", token=f"{start} {stop}")
    return all(
        equivalent(g, x, y, ell)
        for y in range(start + 1, stop + 1)
        for x in range(start, y)
    )


def min_l_homogeneous_partition(g: OrderedGraph, ell: int) -> BlockPartition:
    """Greedy leftmost-maximal blocks; the count is minimal, the blocks
    themselves need not be unique when ell >= 2."""
    if ell < 1:
        raise InputError("ell must be positive", token=str(ell))
    blocks = []
    start = 1
    for y in range(2, g.n + 1):
        if not all(equivalent(g, x, y, ell) for x in range(start, y)):
            blocks.append((start, y - 1))
            start = y
    blocks.append((start, g.n))
    return BlockPartition(ell=ell, blocks=blocks)


def partition_is_homogeneous(g: OrderedGraph, p: BlockPartition) -> bool:
    return p.n == g.n and all(
        is_l_homogeneous(g, block, p.ell) for block in p.blocks
    )
