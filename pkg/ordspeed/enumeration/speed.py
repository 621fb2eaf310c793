from typing import Callable, Optional

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import BoundFunction
from ordspeed.enumeration.budget import BudgetExhausted, BudgetMeter
from ordspeed.enumeration.dto import CountMethod, PropertyKind
from ordspeed.enumeration.exhaustive import iter_all_graphs
from ordspeed.enumeration.extension import (SpecAcceptor, collect_level,
                                            walk_speeds)
from ordspeed.enumeration.membership import member
from ordspeed.enumeration.schemas import (EnumerationBudget, MemberList,
                                          PropertySpec, SpeedSequence)
from ordspeed.enumeration.subgraphs import count_subgraphs, distinct_subgraphs
from ordspeed.exceptions import InputError, InternalContradiction
from ordspeed.graphs import (LoopedOrderedGraph, OrderedGraph, canonical_key,
                             graph_sum, induced)

logger: BoundLogger = get_logger()


def count_speed(
    spec: PropertySpec, max_order: int,
    budget: Optional[EnumerationBudget] = None,
    workers: int = 1,
    cross_check: bool = False,
) -> SpeedSequence:
    if max_order < 1:
        raise InputError("max order must be positive", token=str(max_order))
    budget = budget or EnumerationBudget()
    logger.info(
        "Counting speeds", kind=spec.kind.value, max_order=max_order,
        workers=workers,
    )

    if spec.kind == PropertyKind.FORBIDDEN_SET:
        counts, exact = walk_speeds(
            SpecAcceptor(spec), max_order, budget, workers,
        )
        return SpeedSequence(counts=counts, exact=exact)

    if spec.kind == PropertyKind.BLOCK_PROFILE:
        counts = block_profile_counts(spec, max_order)
        if cross_check:
            _cross_check_profile(spec, counts, budget, workers)
        return SpeedSequence.from_counts(counts)

    host = spec.host
    counts = []
    flags = []
    for n in range(1, max_order + 1):
        if n > host.n:
            counts.append(0)
            flags.append(True)
            continue
        result = count_subgraphs(host, n, budget, CountMethod.FRONTIER)
        counts.append(result.count)
        flags.append(result.exact)
    return SpeedSequence(counts=counts, exact=flags)


def block_counts_by_order(spec: PropertySpec) -> dict[int, int]:
    """Distinct allowed blocks per order."""
    seen: dict[bytes, int] = {}
    for g in spec.graphs:
        seen[canonical_key(g)] = g.n
    by_order: dict[int, int] = {}
    for order in seen.values():
        by_order[order] = by_order.get(order, 0) + 1
    return by_order


def block_profile_counts(spec: PropertySpec, max_order: int) -> list[int]:
    """a_n = sum_s c_s a_{n-s}, since the irreducible blocks of a graph
    are unique."""
    c = block_counts_by_order(spec)
    a = [1] + [0] * max_order
    for n in range(1, max_order + 1):
        a[n] = sum(count * a[n - s] for s, count in c.items() if s <= n)
    return a[1:]


def is_hereditary_profile(spec: PropertySpec) -> bool:
    """True if deleting any vertex of an allowed block leaves a sum of
    allowed blocks, which makes every prefix of a member a member."""
    for g in spec.graphs:
        if g.n == 1:
            continue
        for v in range(1, g.n + 1):
            rest = [u for u in range(1, g.n + 1) if u != v]
            if not member(spec, induced(g, rest)):
                return False
    return True


def filtered_speeds(
    spec: PropertySpec, max_order: int, budget: EnumerationBudget,
) -> list[int]:
    """Members among all graphs of each order, for as many orders as the
    budget covers."""
    meter = BudgetMeter(budget)
    counts: list[int] = []
    try:
        for n in range(1, max_order + 1):
            count = 0
            for g in iter_all_graphs(n):
                meter.spend()
                count += member(spec, g)
            counts.append(count)
    except BudgetExhausted:
        pass
    return counts


def _cross_check_profile(spec, counts, budget, workers) -> None:
    if is_hereditary_profile(spec):
        walked, exact = walk_speeds(
            SpecAcceptor(spec), len(counts), budget, workers,
        )
        checked = [c for c, flag in zip(walked, exact) if flag]
    else:
        checked = filtered_speeds(spec, len(counts), budget)
    if checked != counts[:len(checked)]:
        raise InternalContradiction(
            f"recurrence {counts} disagrees with enumeration {checked}",
        )
    logger.info("Block profile counts cross-checked", orders=len(checked))


def count_predicate_speed(
    predicate: Callable[[OrderedGraph], bool], max_order: int,
    budget: Optional[EnumerationBudget] = None,
) -> SpeedSequence:
    """Speeds of the property given by a hereditary ``predicate``."""
    counts, exact = walk_speeds(
        predicate, max_order, budget or EnumerationBudget(),
    )
    return SpeedSequence(counts=counts, exact=exact)


def list_members(
    spec: PropertySpec, n: int,
    budget: Optional[EnumerationBudget] = None,
) -> MemberList:
    if n < 1:
        raise InputError("order must be positive", token=str(n))
    budget = budget or EnumerationBudget()
    if spec.kind == PropertyKind.FORBIDDEN_SET:
        graphs, exact = collect_level(SpecAcceptor(spec), n, budget)
    elif spec.kind == PropertyKind.BLOCK_PROFILE:
        graphs, exact = _compose_blocks(spec, n, budget)
    elif n > spec.host.n:
        graphs, exact = [], True
    else:
        found, exact = distinct_subgraphs(spec.host, n, budget)
        graphs = [g for g in found.values() if g is not None]
    graphs.sort(key=canonical_key)
    return MemberList(graphs=graphs, exact=exact)


def _compose_blocks(spec, n, budget):
    unique = {canonical_key(g): g for g in spec.graphs}
    blocks = [unique[key] for key in sorted(unique)]
    meter = BudgetMeter(budget)
    result: list[OrderedGraph] = []

    def extend(parts: list[OrderedGraph], size: int) -> None:
        if size == n:
            result.append(graph_sum(parts))
            return
        for block in blocks:
            if size + block.n <= n:
                meter.spend()
                extend(parts + [block], size + block.n)

    try:
        extend([], 0)
    except BudgetExhausted:
        return result, False
    return result, True


def brute_force_speed(spec: PropertySpec, n: int) -> int:
    """Filter every graph on n vertices; an oracle for small n."""
    if n < 1:
        raise InputError("order must be positive", token=str(n))
    if n > 7:
        logger.warning("Brute force over a huge graph space", order=n)
    return sum(1 for g in iter_all_graphs(n) if member(spec, g))


def blowup_count(
    h: LoopedOrderedGraph, b: BoundFunction, n: int,
) -> int:
    """Distinct graphs from blowing vertex i of h into a block of 1..b(i)
    vertices, a clique iff i is looped."""
    if b.m != h.n:
        raise InputError(
            "bound function and graph differ in size", token=f"{b.m}",
        )
    m = h.n
    caps = [n if cap is None else min(cap, n) for cap in b.values]
    seen: set[bytes] = set()

    def extend(sizes: list[int], used: int) -> None:
        i = len(sizes)
        if i == m:
            if used == n:
                seen.add(canonical_key(_blow_up(h, sizes)))
            return
        room = n - used - (m - i - 1)
        for size in range(1, min(caps[i], room) + 1):
            extend(sizes + [size], used + size)

    if n >= m:
        extend([], 0)
    return len(seen)


def _blow_up(h: LoopedOrderedGraph, sizes: list[int]) -> OrderedGraph:
    n = sum(sizes)
    owner = [i for i, size in enumerate(sizes) for _ in range(size)]
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if h.rows[owner[u]] >> owner[v] & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return OrderedGraph(n, tuple(rows))
