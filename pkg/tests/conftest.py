import random

import pytest

from ordspeed.enumeration import PropertySpec
from ordspeed.graphs import GraphKind, OrderedGraph, gen_basic, make_graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> OrderedGraph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return make_graph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20221018)


@pytest.fixture
def make_random_graph():
    return random_graph


@pytest.fixture
def q1() -> OrderedGraph:
    return gen_basic(GraphKind.Q1)


@pytest.fixture
def q2() -> OrderedGraph:
    return gen_basic(GraphKind.Q2)


@pytest.fixture
def permutation_spec() -> PropertySpec:
    """Graphs avoiding H1 = {12, 23} and H2 = {13}: exactly the
    permutation graphs."""
    return PropertySpec.forbidden_set(
        [gen_basic(GraphKind.H1), gen_basic(GraphKind.H2)],
    )
