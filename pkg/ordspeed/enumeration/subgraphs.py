from itertools import combinations
from typing import Optional

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.enumeration.budget import BudgetExhausted, BudgetMeter
from ordspeed.enumeration.dto import CountMethod
from ordspeed.enumeration.schemas import EnumerationBudget, SubgraphCount
from ordspeed.exceptions import InputError
from ordspeed.graphs import OrderedGraph, induced_rows, key_from_rows

logger: BoundLogger = get_logger()

State = tuple[int, tuple[int, ...], tuple[int, ...]]


def count_subgraphs(
    g: OrderedGraph, n: int,
    budget: Optional[EnumerationBudget] = None,
    method: CountMethod = CountMethod.FRONTIER,
) -> SubgraphCount:
    """Number of pairwise distinct ordered graphs induced on n vertices."""
    found, exact = distinct_subgraphs(g, n, budget, method, collect=False)
    return SubgraphCount(count=len(found), exact=exact)


def distinct_subgraphs(
    g: OrderedGraph, n: int,
    budget: Optional[EnumerationBudget] = None,
    method: CountMethod = CountMethod.FRONTIER,
    collect: bool = True,
) -> tuple[dict[bytes, Optional[OrderedGraph]], bool]:
    """Dedup tokens of the n-vertex induced subgraphs, mapped to the graph
    itself when ``collect`` is set; the flag is False on a budget trip."""
    if not 1 <= n <= g.n:
        raise InputError(
            f"order must lie in 1..{g.n}", token=str(n),
        )
    meter = BudgetMeter(budget or EnumerationBudget())
    if collect:
        # listings need whole keys to sort canonically
        meter.budget = meter.budget.copy(update={"exact_keys": True})
    found: dict[bytes, Optional[OrderedGraph]] = {}
    method = CountMethod(method)
    try:
        if method == CountMethod.SUBSETS:
            _scan_subsets(g, n, meter, found, collect)
        else:
            _scan_frontier(g, n, meter, found, collect)
    except BudgetExhausted:
        logger.warning(
            "Subgraph count is a lower bound", order=n, found=len(found),
        )
        return found, False
    logger.debug(
        "Subgraphs counted", host=g.n, order=n, found=len(found),
        nodes=meter.nodes, method=method.value,
    )
    return found, True


def _record(
    n: int, rows: tuple[int, ...], meter: BudgetMeter,
    found: dict[bytes, Optional[OrderedGraph]], collect: bool,
) -> None:
    token = meter.token(key_from_rows(n, rows))
    if token in found:
        return
    meter.check_keys(len(found) + 1)
    found[token] = OrderedGraph(n, rows) if collect else None


def _scan_subsets(g, n, meter, found, collect) -> None:
    for subset in combinations(range(1, g.n + 1), n):
        meter.spend()
        _record(n, induced_rows(g.rows, subset), meter, found, collect)


def _scan_frontier(g, n, meter, found, collect) -> None:
    """Grow vertex subsets left to right, merging partial selections that
    induce the same graph and see the unexplored suffix the same way."""
    rows = g.rows
    size = g.n
    above = [rows[v] >> (v + 1) << (v + 1) for v in range(size)]
    if n == 1:
        meter.spend()
        _record(1, (0,), meter, found, collect)
        return

    states: set[State] = {
        (v, (0,), (above[v],)) for v in range(size - n + 1)
    }
    meter.spend(len(states))
    for j in range(1, n):
        last_level = j + 1 == n
        next_states: set[State] = set()
        for last, grown, profiles in states:
            for v in range(last + 1, size - n + j + 1):
                meter.spend()
                new_row = 0
                new_grown = list(grown)
                for i, profile in enumerate(profiles):
                    if profile >> v & 1:
                        new_row |= 1 << i
                        new_grown[i] |= 1 << j
                new_grown.append(new_row)
                if last_level:
                    _record(n, tuple(new_grown), meter, found, collect)
                    continue
                cut = ~((1 << (v + 1)) - 1)
                next_states.add((
                    v,
                    tuple(new_grown),
                    tuple(p & cut for p in profiles) + (above[v],),
                ))
        states = next_states
        meter.check_keys(len(states))
