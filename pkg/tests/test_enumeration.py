"""
Membership, speeds of hereditary properties, distinct induced subgraph
counts and blow-up counts, checked against brute force and known formulas.
"""

from itertools import combinations

import pytest
from pydantic import ValidationError

from ordspeed.decomposition import BoundFunction, is_irreducible
from ordspeed.enumeration import (CountMethod, EnumerationBudget,
                                  PropertySpec, blowup_count,
                                  bounded_matching_forbidden_set,
                                  brute_force_speed, count_predicate_speed,
                                  count_speed, count_subgraphs,
                                  example_block_profile, filtered_speeds,
                                  is_hereditary_profile, iter_all_graphs,
                                  list_members, member)
from ordspeed.exceptions import InputError
from ordspeed.graphs import (GraphKind, LoopedOrderedGraph, Orientation,
                             Permutation, canonical_key, gen_basic, gen_M,
                             gen_permutation_graph, gen_somebases_prefix,
                             gen_type1_host, gen_type3_host, induced,
                             make_graph)
from ordspeed.speeds import (fib, is_supermultiplicative, recurrence_terms,
                             remark_speed)

FACTORIALS = [1, 2, 6, 24, 120, 720, 5040]

# -- Helpers -----------------------------------------------------------------


def _irreducible_order_three():
    return [
        g for g in iter_all_graphs(3) if is_irreducible(g)
    ]


def _random_forbidden_spec(rng, make_random_graph):
    graphs = [
        make_random_graph(rng, rng.randint(2, 4))
        for _ in range(rng.randint(1, 3))
    ]
    return PropertySpec.forbidden_set(graphs)


def _vertex_deleted(g):
    for v in range(1, g.n + 1):
        yield induced(g, [u for u in range(1, g.n + 1) if u != v])


# == 1. Membership ===========================================================

class TestMember:
    def test_permutation_graphs(self, permutation_spec):
        for values in ((1,), (2, 1), (3, 1, 2), (2, 4, 1, 3), (4, 3, 2, 1)):
            g = gen_permutation_graph(Permutation(values=values))
            assert member(permutation_spec, g)

    def test_block_profile(self, q1):
        spec = example_block_profile()
        assert member(spec, q1)
        assert not member(spec, make_graph(6, [(1, 6)]))

    def test_subgraph_closure(self):
        spec = PropertySpec.subgraph_closure(gen_basic(GraphKind.K, 5))
        assert member(spec, gen_basic(GraphKind.K, 3))
        assert not member(spec, gen_basic(GraphKind.E, 2))

    def test_block_profile_needs_irreducible_blocks(self):
        with pytest.raises(ValidationError):
            PropertySpec.block_profile([gen_basic(GraphKind.E, 2)])

    def test_closure_needs_host(self):
        with pytest.raises(ValidationError):
            PropertySpec(kind="subgraph_closure")

    def test_examples(self):
        assert len(example_block_profile().graphs) == 6
        assert len(bounded_matching_forbidden_set(2).graphs) == 6
        with pytest.raises(InputError):
            bounded_matching_forbidden_set(-1)


# == 2. Speeds of forbidden sets =============================================

class TestForbiddenSetSpeeds:
    def test_permutations(self, permutation_spec):
        speeds = count_speed(permutation_spec, 5)
        assert speeds.counts == FACTORIALS[:5]
        assert speeds.complete

    @pytest.mark.slow
    def test_permutations_to_seven(self, permutation_spec):
        assert count_speed(permutation_spec, 7).counts == FACTORIALS

    def test_nothing_forbidden(self):
        speeds = count_speed(PropertySpec.forbidden_set([]), 3)
        assert speeds.counts == [1, 2, 8]

    def test_single_vertex_forbidden(self):
        spec = PropertySpec.forbidden_set([gen_basic(GraphKind.E, 1)])
        assert count_speed(spec, 3).counts == [0, 0, 0]

    def test_workers_agree(self, permutation_spec):
        single = count_speed(permutation_spec, 5, workers=1)
        pooled = count_speed(permutation_spec, 5, workers=2)
        assert pooled.counts == single.counts

    def test_bad_order(self, permutation_spec):
        with pytest.raises(InputError):
            count_speed(permutation_spec, 0)

    def test_against_brute_force(self, rng, make_random_graph):
        for _ in range(5):
            spec = _random_forbidden_spec(rng, make_random_graph)
            speeds = count_speed(spec, 4)
            assert speeds.counts == [
                brute_force_speed(spec, n) for n in range(1, 5)
            ]

    @pytest.mark.slow
    def test_against_brute_force_order_five(self, rng, make_random_graph):
        for _ in range(20):
            spec = _random_forbidden_spec(rng, make_random_graph)
            assert count_speed(spec, 5).counts[-1] == \
                brute_force_speed(spec, 5)


class TestBoundedMatching:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_formula(self, k):
        speeds = count_speed(bounded_matching_forbidden_set(k), 7)
        assert speeds.counts == [remark_speed(n, k) for n in range(1, 8)]

    def test_brute_force(self):
        spec = bounded_matching_forbidden_set(1)
        assert [brute_force_speed(spec, n) for n in range(1, 6)] == \
            [1, 2, 3, 4, 5]

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_formula_to_twelve(self, k):
        speeds = count_speed(bounded_matching_forbidden_set(k), 12)
        assert speeds.counts == [remark_speed(n, k) for n in range(1, 13)]


class TestSupermultiplicativity:
    def test_permutations(self, permutation_spec):
        assert is_supermultiplicative(count_speed(permutation_spec, 6)) \
            is None

    @pytest.mark.slow
    def test_irreducible_forbidden_sets(self, rng):
        candidates = _irreducible_order_three()
        assert len(candidates) == 5
        for _ in range(20):
            spec = PropertySpec.forbidden_set(rng.sample(candidates, 2))
            assert is_supermultiplicative(count_speed(spec, 7)) is None


class TestBudget:
    def test_truncated_walk(self, permutation_spec):
        speeds = count_speed(
            permutation_spec, 6, EnumerationBudget(max_nodes=50),
        )
        assert speeds.exact == [True, True, True, False, False, False]
        assert speeds.exact_prefix() == [1, 2, 6]
        assert not speeds.complete

    def test_truncated_subgraph_count(self):
        result = count_subgraphs(
            make_graph(3, [(1, 2)]), 2, EnumerationBudget(max_set_keys=1),
            CountMethod.SUBSETS,
        )
        assert result.count == 1
        assert not result.exact

    def test_budget_must_be_positive(self):
        with pytest.raises(ValidationError):
            EnumerationBudget(max_nodes=0)

    @pytest.mark.parametrize("max_nodes", [50, 3000])
    def test_partial_counts_ignore_workers(self, max_nodes):
        spec = PropertySpec.forbidden_set([])
        budget = EnumerationBudget(max_nodes=max_nodes)
        serial = count_speed(spec, 6, budget, workers=1)
        pooled = count_speed(spec, 6, budget, workers=2)
        assert not serial.complete
        assert pooled.counts == serial.counts
        assert pooled.exact == serial.exact

    def test_partial_prefix_ignores_workers(self, permutation_spec):
        budget = EnumerationBudget(max_nodes=50)
        speeds = [
            count_speed(permutation_spec, 6, budget, workers=workers)
            for workers in (1, 2, 3)
        ]
        assert speeds[0] == speeds[1] == speeds[2]



# == 3. Block profiles =======================================================

class TestBlockProfileSpeeds:
    def test_recurrence(self):
        speeds = count_speed(example_block_profile(), 6)
        assert speeds.counts == [1, 2, 4, 9, 18, 36]
        assert speeds.counts == recurrence_terms((1, 2, 1, 1, 1), 6)[1:]

    def test_cross_check(self):
        speeds = count_speed(example_block_profile(), 7, cross_check=True)
        assert speeds.counts[-1] == 73

    def test_brute_force(self):
        spec = example_block_profile()
        assert [brute_force_speed(spec, n) for n in range(1, 6)] == \
            [1, 2, 4, 9, 18]

    @pytest.mark.slow
    def test_cross_check_to_ten(self):
        speeds = count_speed(example_block_profile(), 10, cross_check=True)
        assert speeds.counts[-1] == 615

    def test_predicate_walk(self):
        spec = example_block_profile()
        speeds = count_predicate_speed(lambda g: member(spec, g), 6)
        assert speeds.counts == [1, 2, 4, 9, 18, 36]

    def test_edgeless_predicate(self):
        speeds = count_predicate_speed(lambda g: g.edge_count() == 0, 4)
        assert speeds.counts == [1, 1, 1, 1]

    def test_profile_heredity(self, q1):
        assert is_hereditary_profile(example_block_profile())
        spec = PropertySpec.block_profile([gen_basic(GraphKind.K, 1), q1])
        assert not is_hereditary_profile(spec)

    def test_cross_check_without_heredity(self, q1):
        spec = PropertySpec.block_profile([gen_basic(GraphKind.K, 1), q1])
        speeds = count_speed(spec, 6, cross_check=True)
        assert speeds.counts == [1, 1, 1, 2, 3, 4]
        assert filtered_speeds(spec, 6, EnumerationBudget()) == \
            [1, 1, 1, 2, 3, 4]

    def test_filtered_speeds_stop_at_budget(self, q1):
        spec = PropertySpec.block_profile([gen_basic(GraphKind.K, 1), q1])
        budget = EnumerationBudget(max_nodes=100)
        assert filtered_speeds(spec, 6, budget) == [1, 1, 1, 2]



# == 4. Member lists =========================================================

class TestListMembers:
    def test_two_vertices(self, permutation_spec):
        members = list_members(permutation_spec, 2)
        assert members.graphs == [
            gen_basic(GraphKind.E, 2), gen_basic(GraphKind.K, 2),
        ]
        assert members.exact

    def test_no_edges(self):
        spec = PropertySpec.forbidden_set([gen_basic(GraphKind.K, 2)])
        assert list_members(spec, 3).graphs == [gen_basic(GraphKind.E, 3)]

    def test_closure(self):
        spec = PropertySpec.subgraph_closure(gen_basic(GraphKind.K, 3))
        assert list_members(spec, 2).graphs == [gen_basic(GraphKind.K, 2)]
        assert list_members(spec, 4).graphs == []

    def test_block_profile(self):
        spec = example_block_profile()
        graphs = list_members(spec, 4).graphs
        assert len(graphs) == 9
        keys = [canonical_key(g) for g in graphs]
        assert keys == sorted(set(keys))
        assert all(member(spec, g) for g in graphs)

    def test_heredity(self, permutation_spec, q1):
        specs = [
            permutation_spec,
            example_block_profile(),
            bounded_matching_forbidden_set(1),
            PropertySpec.subgraph_closure(q1),
        ]
        for spec in specs:
            for n in range(2, 6):
                for g in list_members(spec, n).graphs:
                    assert all(
                        member(spec, h) for h in _vertex_deleted(g)
                    )


# == 5. Distinct induced subgraphs ===========================================

class TestCountSubgraphs:
    def test_clique(self):
        assert count_subgraphs(gen_basic(GraphKind.K, 3), 2).count == 1

    def test_single_edge(self):
        assert count_subgraphs(make_graph(3, [(1, 2)]), 2).count == 2

    def test_q1(self, q1):
        assert count_subgraphs(q1, 3).count == 3

    def test_order_out_of_range(self, q1):
        with pytest.raises(InputError):
            count_subgraphs(q1, 5)

    def test_methods_agree(self, rng, make_random_graph):
        for _ in range(20):
            g = make_random_graph(rng, rng.randint(1, 11))
            n = rng.randint(1, g.n)
            frontier = count_subgraphs(g, n, method=CountMethod.FRONTIER)
            subsets = count_subgraphs(g, n, method=CountMethod.SUBSETS)
            assert frontier.count == subsets.count
            assert frontier.exact and subsets.exact

    def test_exact_keys_agree_with_digests(self, rng, make_random_graph):
        exact_keys = EnumerationBudget(exact_keys=True)
        for n in (3, 16):
            g = make_random_graph(rng, 18)
            digests = count_subgraphs(g, n)
            whole = count_subgraphs(g, n, exact_keys)
            subsets = count_subgraphs(
                g, n, exact_keys, method=CountMethod.SUBSETS,
            )
            assert digests.count == whole.count == subsets.count
            assert digests.exact and whole.exact


    def test_closure_speed(self, q1):
        speeds = count_speed(PropertySpec.subgraph_closure(q1), 5)
        assert speeds.counts == [1, 2, 3, 1, 0]
        assert speeds.complete

    def test_alternating_host(self):
        g = gen_type1_host(4)
        for n in range(1, 6):
            assert count_subgraphs(g, n).count >= 2 ** (n - 1)

    @pytest.mark.parametrize(
        "n", [3, pytest.param(4, marks=pytest.mark.slow)],
    )
    def test_matched_pairs(self, n):
        m = n * n + n
        for bits in range(16):
            pattern = tuple(bits >> b & 1 for b in range(4))
            for orientation in Orientation:
                g = gen_M(pattern, m, orientation)
                assert count_subgraphs(g, n).count >= 2 ** (n - 1)

    def test_long_edge_blocks(self):
        g = gen_type3_host(2, 12)
        for n in range(1, 5):
            assert count_subgraphs(g, n).count >= fib(n, 3)

    @pytest.mark.slow
    def test_long_edge_blocks_to_six(self):
        g = gen_type3_host(2, 12)
        for n in range(5, 7):
            assert count_subgraphs(g, n).count >= fib(n, 3)

    def test_somebases_fibonacci(self):
        g = gen_somebases_prefix((1, 1), 30)
        t = recurrence_terms((1, 1), 8)
        for n in range(1, 9):
            count = count_subgraphs(g, n).count
            assert t[n - 1] <= count <= 2 * t[n]

    @pytest.mark.slow
    def test_somebases_two_two(self):
        g = gen_somebases_prefix((2, 2), 40)
        t = recurrence_terms((2, 2), 7)
        for n in range(1, 8):
            count = count_subgraphs(g, n).count
            assert t[n - 1] <= count <= 2 * t[n]


# == 6. Blow-ups =============================================================

class TestBlowupCount:
    def test_looped_vertex(self):
        h = LoopedOrderedGraph.from_edges(1, [], [1])
        b = BoundFunction(values=(None,))
        for n in range(1, 6):
            assert blowup_count(h, b, n) == 1

    def test_joined_pair(self):
        h = LoopedOrderedGraph.from_edges(2, [(1, 2)])
        assert blowup_count(h, BoundFunction(values=(None, None)), 4) == 3

    def test_bound_too_small(self):
        h = LoopedOrderedGraph.from_edges(1, [])
        assert blowup_count(h, BoundFunction(values=(1,)), 2) == 0

    def test_collisions_are_merged(self):
        # two unlooped, unjoined vertices give E_n for every split
        h = LoopedOrderedGraph.from_edges(2, [])
        assert blowup_count(h, BoundFunction(values=(None, None)), 5) == 1

    def test_size_mismatch(self):
        h = LoopedOrderedGraph.from_edges(2, [])
        with pytest.raises(InputError):
            blowup_count(h, BoundFunction(values=(None,)), 3)

    def test_bounded_split(self):
        h = LoopedOrderedGraph.from_edges(2, [(1, 2)])
        b = BoundFunction(values=(2, None))
        assert blowup_count(h, b, 5) == 2

    def test_matches_direct_enumeration(self):
        h = LoopedOrderedGraph.from_edges(3, [(1, 3)], [2])
        b = BoundFunction(values=(2, None, 1))
        n = 5
        seen = set()
        for cuts in combinations(range(1, n), 2):
            sizes = [cuts[0], cuts[1] - cuts[0], n - cuts[1]]
            if sizes[0] > 2 or sizes[2] > 1:
                continue
            owner = [i for i, s in enumerate(sizes) for _ in range(s)]
            edges = [
                (u + 1, v + 1)
                for u, v in combinations(range(n), 2)
                if h.adjacent(owner[u] + 1, owner[v] + 1)
            ]
            seen.add(canonical_key(make_graph(n, edges)))
        assert blowup_count(h, b, n) == len(seen)
