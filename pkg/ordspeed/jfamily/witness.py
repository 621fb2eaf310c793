from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import irreducible_decomposition
from ordspeed.graphs import OrderedGraph, contains, graph_sum, power
from ordspeed.jfamily.identify import check_ell, j_ell_member
from ordspeed.jfamily.schemas import WitnessSetReport

logger: BoundLogger = get_logger()


def comparable(a: OrderedGraph, b: OrderedGraph) -> bool:
    return contains(a, b) or contains(b, a)


def min_witness_k(g: OrderedGraph, ell: int) -> WitnessSetReport:
    """Fewest consecutive runs of pairwise comparable J_ell blocks."""
    check_ell(ell)
    decomposition = irreducible_decomposition(g)
    blocks = decomposition.blocks
    for index, block in enumerate(decomposition.graphs, start=1):
        if not j_ell_member(block, ell):
            return WitnessSetReport(
                min_k=None, blocks=blocks, offending_block=index,
            )

    # comparability is inherited by sub-runs, so greedy is optimal
    runs: list[list[int]] = []
    for index, block in enumerate(decomposition.graphs, start=1):
        if runs and all(
                comparable(block, decomposition.graphs[j - 1])
                for j in runs[-1]):
            runs[-1].append(index)
        else:
            runs.append([index])
    logger.debug("Witness runs", blocks=len(blocks), runs=len(runs))
    return WitnessSetReport(min_k=len(runs), runs=runs, blocks=blocks)


def incomparable_pair_host(
    a: OrderedGraph, b: OrderedGraph, m: int,
) -> OrderedGraph:
    """A B A B ... with m copies of each."""
    return power(graph_sum([a, b]), m)
