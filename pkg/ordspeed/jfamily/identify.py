from itertools import combinations
from typing import Optional

from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.decomposition import is_irreducible
from ordspeed.exceptions import (ContractViolation, InputError,
                                 InternalContradiction)
from ordspeed.graphs import (GraphKind, OrderedGraph, canonical_key,
                             gen_basic, induced)
from ordspeed.jfamily.dto import JTag
from ordspeed.jfamily.schemas import JClass, P3P4Result

logger: BoundLogger = get_logger()

FIXED_ORDER_TAGS = (JTag.Q1, JTag.Q2)


def check_ell(ell: int) -> None:
    if ell < 1:
        raise InputError("ell must be positive", token=str(ell))


def j_member_graph(tag: JTag, n: int = 4) -> OrderedGraph:
    return gen_basic(GraphKind(JTag(tag).value), n)


def _template_fits(tag: JTag, n: int) -> bool:
    if tag in FIXED_ORDER_TAGS:
        return n == 4
    return tag != JTag.J2 or n >= 2


def j_identify(g: OrderedGraph) -> Optional[JClass]:
    key = canonical_key(g)
    for tag in JTag:
        if _template_fits(tag, g.n) and key == canonical_key(
                j_member_graph(tag, g.n)):
            return JClass(tag=tag, order=g.n)
    return None


def j_ell_member(g: OrderedGraph, ell: int) -> bool:
    check_ell(ell)
    j_class = j_identify(g)
    if j_class is None or g.n > ell:
        return False
    return j_class.tag not in FIXED_ORDER_TAGS or ell >= 4


def j_ell_members(ell: int) -> list[OrderedGraph]:
    """J_ell without repeats, sorted by canonical key."""
    check_ell(ell)
    found: dict[bytes, OrderedGraph] = {}
    for n in range(1, ell + 1):
        for tag in JTag:
            if _template_fits(tag, n):
                g = j_member_graph(tag, n)
                found.setdefault(canonical_key(g), g)
    return [found[key] for key in sorted(found)]


def irreducible_subgraphs(
    g: OrderedGraph, order: int,
) -> dict[bytes, tuple[OrderedGraph, tuple[int, ...]]]:
    """Distinct irreducible induced subgraphs of one order, each with the
    lexicographically first vertex set inducing it."""
    found: dict[bytes, tuple[OrderedGraph, tuple[int, ...]]] = {}
    for vertices in combinations(range(1, g.n + 1), order):
        sub = induced(g, vertices)
        if is_irreducible(sub):
            found.setdefault(canonical_key(sub), (sub, vertices))
    return found


def small_subgraph_test(g: OrderedGraph) -> Optional[tuple]:
    """None if G has at most one irreducible induced subgraph of order 3
    and of order 4, else the first two distinct ones of the failing
    order as (graph, vertices) pairs."""
    for order in (3, 4):
        if order > g.n:
            break
        found = irreducible_subgraphs(g, order)
        if len(found) > 1:
            first, second = sorted(found)[:2]
            return found[first], found[second]
    return None


def p3p4_classify(g: OrderedGraph) -> P3P4Result:
    if not is_irreducible(g):
        raise ContractViolation("classification needs an irreducible graph")
    clash = small_subgraph_test(g)
    if clash is not None:
        (a, a_vertices), (b, b_vertices) = clash
        logger.debug("Distinct irreducible subgraphs", order=a.n)
        return P3P4Result(
            witness=(a, b), witness_vertices=(a_vertices, b_vertices),
        )
    j_class = j_identify(g)
    if j_class is None:
        raise InternalContradiction(
            f"{g!r} passes the small subgraph test but is not in J",
        )
    return P3P4Result(j_class=j_class)
