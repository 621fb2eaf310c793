from typing import Callable, Optional

from joblib import Parallel, delayed
from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.enumeration.budget import BudgetExhausted, BudgetMeter
from ordspeed.enumeration.dto import PropertyKind
from ordspeed.enumeration.membership import member
from ordspeed.enumeration.schemas import EnumerationBudget, PropertySpec
from ordspeed.graphs import OrderedGraph, contains_through_last

logger: BoundLogger = get_logger()

Accept = Callable[[OrderedGraph], bool]


def children(g: OrderedGraph):
    """Every one-vertex extension of g by a new last vertex."""
    n = g.n
    top = 1 << n
    for row in range(1 << n):
        yield OrderedGraph(
            n + 1,
            tuple(
                r | top if row >> i & 1 else r
                for i, r in enumerate(g.rows)
            ) + (row,),
        )


class SpecAcceptor:
    """Membership test for a child whose parent is already a member.

    Forbidden sets only look at embeddings through the new vertex.
    """

    def __init__(self, spec: PropertySpec) -> None:
        self.spec = spec
        self.forbidden = sorted(spec.graphs, key=lambda h: h.n)

    def __call__(self, child: OrderedGraph) -> bool:
        if self.spec.kind != PropertyKind.FORBIDDEN_SET:
            return member(self.spec, child)
        for h in self.forbidden:
            if h.n > child.n:
                break
            if contains_through_last(h, child):
                return False
        return True


class ExtensionWalk:
    """Depth-first walk of the extension tree of a hereditary property,
    counting members per order and optionally keeping one level."""

    def __init__(
        self, accept: Accept, max_order: int, meter: BudgetMeter,
        keep_order: Optional[int] = None,
    ) -> None:
        self.accept = accept
        self.max_order = max_order
        self.meter = meter
        self.keep_order = keep_order
        self.counts = [0] * (max_order + 1)
        self.kept: list[OrderedGraph] = []

    def run(self, roots: list[OrderedGraph]) -> bool:
        """Walk below ``roots`` (already accepted); False on budget trip."""
        try:
            for root in roots:
                self._visit(root)
        except BudgetExhausted:
            return False
        return True

    def _visit(self, g: OrderedGraph) -> None:
        self.counts[g.n] += 1
        if g.n == self.keep_order:
            self.kept.append(g)
        if g.n == self.max_order:
            return
        for child in children(g):
            self.meter.spend()
            if self.accept(child):
                self._visit(child)


ROOT = OrderedGraph(1, (0,))


def walk_speeds(
    accept: Accept, max_order: int, budget: EnumerationBudget,
    workers: int = 1,
) -> tuple[list[int], list[bool]]:
    """Member counts for orders 1..max_order with per-order exact flags."""
    if not accept(ROOT):
        return [0] * max_order, [True] * max_order
    counts, finished = _walk(accept, max_order, budget, workers)
    if finished:
        return counts, [True] * max_order

    # find the deepest order the budget fully covers
    exact = [False] * max_order
    for depth in range(1, max_order):
        partial, done = _walk(accept, depth, budget, workers)
        if not done:
            break
        counts[:depth] = partial
        exact[:depth] = [True] * depth
    logger.warning(
        "Speeds truncated by budget",
        exact_orders=sum(exact), max_order=max_order,
    )
    return counts, exact


def _walk(accept, max_order, budget, workers) -> tuple[list[int], bool]:
    if workers > 1:
        counts = _parallel_walk(accept, max_order, budget, workers)
        if counts is not None:
            return counts, True
    # a tripped budget always leaves the serial walk's partial counts
    walk = ExtensionWalk(accept, max_order, BudgetMeter(budget))
    finished = walk.run([ROOT])
    return walk.counts[1:], finished


def _parallel_walk(accept, max_order, budget, workers) -> Optional[list[int]]:
    """Counts if the whole tree fits the budget, else None.

    Nodes are charged as in the serial walk, so both finish together.
    """
    meter = BudgetMeter(budget)
    try:
        frontier, counts = _split(accept, max_order, workers, meter)
    except BudgetExhausted:
        return None
    spent = meter.nodes
    share = budget.copy(
        update={"max_nodes": max(1, budget.max_nodes - spent)},
    )
    results = Parallel(n_jobs=workers)(
        delayed(_walk_subtree)(accept, max_order, share, g) for g in frontier
    )
    # summed in submission order, so the result ignores scheduling
    for sub_counts, sub_nodes, sub_finished in results:
        if not sub_finished:
            return None
        spent += sub_nodes
        for n, count in enumerate(sub_counts):
            counts[n] += count
    if spent > budget.max_nodes:
        logger.warning(
            "Enumeration budget exhausted", limit="max_nodes", nodes=spent,
        )
        return None
    return counts[1:]


def _split(accept, max_order, workers, meter):
    """Expand breadth-first until enough subtrees exist for the pool."""
    counts = [0] * (max_order + 1)
    level = [ROOT]
    while level and level[0].n < max_order and len(level) < 4 * workers:
        counts[level[0].n] += len(level)
        nxt = []
        for g in level:
            for child in children(g):
                meter.spend()
                if accept(child):
                    nxt.append(child)
        level = nxt
    return level, counts


def _walk_subtree(accept, max_order, budget, g):
    meter = BudgetMeter(budget)
    walk = ExtensionWalk(accept, max_order, meter)
    finished = walk.run([g])
    return walk.counts, meter.nodes, finished


def collect_level(
    accept: Accept, order: int, budget: EnumerationBudget,
) -> tuple[list[OrderedGraph], bool]:
    if not accept(ROOT):
        return [], True
    walk = ExtensionWalk(accept, order, BudgetMeter(budget), keep_order=order)
    finished = walk.run([ROOT])
    return walk.kept, finished
