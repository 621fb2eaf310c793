from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition.schemas import IrreducibleDecomposition
from ordspeed.exceptions import ContractViolation, InputError
from ordspeed.graphs import OrderedGraph, induced

logger: BoundLogger = get_logger()


def block_intervals(g: OrderedGraph) -> list[tuple[int, int]]:
    """Maximal runs with no uncrossed boundary inside them."""
    blocks = []
    start = 1
    reach = 0
    for p in range(1, g.n):
        reach = max(reach, g.max_neighbor(p))
        if reach <= p:
            blocks.append((start, p))
            start = p + 1
    blocks.append((start, g.n))
    return blocks


def irreducible_decomposition(g: OrderedGraph) -> IrreducibleDecomposition:
    blocks = block_intervals(g)
    return IrreducibleDecomposition(
        blocks=blocks,
        graphs=[
            induced(g, range(start, stop + 1)) for start, stop in blocks
        ],
        sizes=[stop - start + 1 for start, stop in blocks],
    )


def is_irreducible(g: OrderedGraph) -> bool:
    return len(block_intervals(g)) == 1


def shrink_irreducible(g: OrderedGraph, k: int) -> OrderedGraph:
    """Delete vertex 1 or 2 until k vertices remain, keeping the graph
    irreducible at every step."""
    if not is_irreducible(g):
        raise ContractViolation("shrinking needs an irreducible graph")
    if not 1 <= k <= g.n:
        raise InputError("target order out of range", token=str(k))
    while g.n > k:
        first = g.max_neighbor(1)
        second = g.max_neighbor(2)
        # second == 0 when vertex 2 is isolated
        if second == 0 or first >= second:
            dropped = 2
        else:
            dropped = 1
        keep = [v for v in range(1, g.n + 1) if v != dropped]
        g = induced(g, keep)
        logger.debug("Vertex dropped", dropped=dropped, order=g.n)
    return g
