from ordspeed.enumeration.schemas import PropertySpec
from ordspeed.exceptions import InputError
from ordspeed.graphs import (GraphKind, OrderedGraph, gen_basic, make_graph,
                             power)


def example_block_profile() -> PropertySpec:
    """Blocks are a single vertex, a lone edge 1n on 2..5 vertices, or Q1;
    growth root about 2.03."""
    allowed = [gen_basic(GraphKind.K, 1)]
    allowed.extend(gen_basic(GraphKind.J2, n) for n in range(2, 6))
    allowed.append(gen_basic(GraphKind.Q1))
    return PropertySpec.block_profile(allowed)


def bounded_matching_forbidden_set(k: int) -> PropertySpec:
    """At most k edges, all of length one and pairwise disjoint."""
    if k < 0:
        raise InputError("k must be nonnegative", token=str(k))
    long_edge: list[OrderedGraph] = [
        make_graph(3, [(1, 3)] + extra)
        for extra in ([], [(1, 2)], [(2, 3)], [(1, 2), (2, 3)])
    ]
    path = gen_basic(GraphKind.L, 3)
    matching = power(gen_basic(GraphKind.K, 2), k + 1)
    return PropertySpec.forbidden_set(long_edge + [path, matching])
