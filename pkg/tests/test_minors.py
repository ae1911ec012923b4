import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from elimdist.canon import canonical_form, enumerate_graphs, graphs_up_to
from elimdist.errors import BudgetExhausted, InvalidObstructionSet
from elimdist.graph import (complete_graph, cycle_graph, empty_graph, null_graph, path_graph,
                            star_graph)
from elimdist.minors import (MinorMap, ObstructionSet, excludes, is_depth_minor, is_minor,
                             max_clique_depth_minor, minor_minimal_filter, one_step_minors)
from elimdist.suites import run_suite

K1, K2, K3, K4, K5 = (complete_graph(i) for i in range(1, 6))
P4 = path_graph(4)


def all_minor_codes(g):
    """Every minor of ``g`` up to isomorphism, by closing under one-step operations."""
    seen = {canonical_form(g): g}
    todo = [g]
    while todo:
        cur = todo.pop()
        for h in one_step_minors(cur):
            c = canonical_form(h)
            if c not in seen:
                seen[c] = h
                todo.append(h)
    return set(seen)


def brute_depth_minor(h, g, r):
    """Try every map V(G) -> V(H) or unused, checking branch sets directly."""
    for labels in itertools.product(range(-1, h.n), repeat=g.n):
        sets = [[v for v in range(g.n) if labels[v] == x] for x in range(h.n)]
        if any(not s for s in sets):
            continue
        ok = True
        for s in sets:
            sub, _ = g.induced_subgraph(s)
            dist = dict(nx.all_pairs_shortest_path_length(to_nx(sub)))
            if not any(all(u in dist[c] and dist[c][u] <= r for u in range(sub.n))
                       for c in range(sub.n)):
                ok = False
                break
        if ok and all(any(g.has_edge(u, v) for u in sets[a] for v in sets[b]) for a, b in h.edges()):
            return True
    return False


class TestIsMinor:
    def test_examples(self):
        m = is_minor(K3, cycle_graph(4))
        assert m is not None and m.is_valid(K3, cycle_graph(4))
        assert is_minor(K3, P4) is None
        assert is_minor(K4, K4) is not None

    def test_null_pattern(self):
        assert is_minor(null_graph(), null_graph()) is not None
        assert is_minor(K1, null_graph()) is None

    def test_reflexive_on_small_graphs(self):
        for g in graphs_up_to(6):
            m = is_minor(g, g)
            assert m is not None and m.is_valid(g, g)

    def test_agrees_with_minor_closure(self):
        # host graphs up to 5 vertices, every pattern up to 4
        patterns = list(graphs_up_to(4))
        for g in graphs_up_to(5):
            closure = all_minor_codes(g)
            for h in patterns:
                m = is_minor(h, g)
                assert (m is not None) == (canonical_form(h) in closure)
                if m is not None:
                    assert m.is_valid(h, g)

    def test_transitivity_sampled(self):
        assert run_suite("minor-transitivity", samples=400, seed=3).passed

    def test_budget_is_not_a_negative_answer(self):
        with pytest.raises(BudgetExhausted):
            is_minor(K3, path_graph(8), budget=1)

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv("ELIMDIST_BUDGET", "1")
        with pytest.raises(BudgetExhausted):
            is_minor(K3, path_graph(8))


class TestDepthMinor:
    def test_examples(self):
        m = is_depth_minor(K3, cycle_graph(6), 1)
        assert m is not None and m.is_valid(K3, cycle_graph(6))
        assert m.radius == 1
        assert is_depth_minor(K3, cycle_graph(6), 0) is None
        assert is_depth_minor(K1, P4, 0) is not None

    def test_negative_radius(self):
        with pytest.raises(ValueError):
            is_depth_minor(K1, K1, -1)

    def test_agrees_with_brute_force(self):
        patterns = [K2, K3, path_graph(3), empty_graph(2)]
        for g in graphs_up_to(5):
            for h in patterns:
                for r in range(3):
                    m = is_depth_minor(h, g, r)
                    assert (m is not None) == brute_depth_minor(h, g, r), (g, h, r)
                    if m is not None:
                        assert m.is_valid(h, g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=1, max_n=4), graphs(max_n=7))
    def test_monotone_in_radius_and_saturates(self, h, g):
        found = [is_depth_minor(h, g, r) is not None for r in range(g.n + 1)]
        assert all(a <= b for a, b in zip(found, found[1:]))
        assert found[-1] == (is_minor(h, g) is not None)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=1, max_n=4), graphs(max_n=6))
    def test_radius_zero_is_subgraph(self, h, g):
        matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
        is_sub = any(True for _ in matcher.subgraph_monomorphisms_iter())
        assert (is_depth_minor(h, g, 0) is not None) == is_sub
        if is_sub:
            assert is_minor(h, g) is not None

    def test_deletion_stability(self):
        assert run_suite("depth-deletion", n_max=5).passed


class TestMinorMap:
    def test_violations_detected(self):
        g = path_graph(4)
        assert MinorMap((frozenset({0}), frozenset({0}))).violations(K2, g)
        assert MinorMap((frozenset({0, 2}), frozenset({1}))).violations(K2, g)
        assert MinorMap((frozenset({0}), frozenset({2}))).violations(K2, g)
        assert not MinorMap((frozenset({0}), frozenset({1}))).violations(K2, g)

    def test_radius_checked_inside_branch_set(self):
        g = path_graph(5)
        m = MinorMap((frozenset(range(5)),), centers=(0,), radius=2)
        assert not m.is_valid(K1, g)
        assert MinorMap((frozenset(range(5)),), centers=(2,), radius=2).is_valid(K1, g)

    def test_json_round_trip(self):
        m = is_depth_minor(K3, cycle_graph(6), 1)
        assert MinorMap.from_json(m.to_json()) == m


class TestObstructionSets:
    def test_excludes_examples(self):
        assert excludes(P4, [K3])
        assert not excludes(K3, [K3])
        assert excludes(K5, [])

    def test_rejects_empty_member(self):
        with pytest.raises(InvalidObstructionSet):
            ObstructionSet.of([null_graph()])

    def test_rejects_duplicates(self):
        with pytest.raises(InvalidObstructionSet):
            ObstructionSet.of([P4, path_graph(4).permuted([3, 2, 1, 0])])

    def test_rejects_non_antichain(self):
        with pytest.raises(InvalidObstructionSet):
            ObstructionSet.of([K3, K4])

    def test_one_step_minors_examples(self):
        def codes(gs):
            return sorted(canonical_form(g) for g in gs)

        assert codes(one_step_minors(K2)) == codes([K1, empty_graph(2)])
        assert codes(one_step_minors(K1)) == codes([null_graph()])
        assert codes(one_step_minors(K3)) == codes([K2, path_graph(3)])
        assert one_step_minors(null_graph()) == []

    def test_one_step_minors_are_proper(self):
        for g in enumerate_graphs(5):
            for h in one_step_minors(g):
                assert (h.n, h.num_edges) < (g.n, g.num_edges) or h.n < g.n
                assert is_minor(h, g) is not None

    def test_minimal_filter(self):
        assert minor_minimal_filter([K3, K4]).same_classes([K3])
        assert minor_minimal_filter([K3]).same_classes([K3])
        assert minor_minimal_filter([K3, P4]).same_classes([K3, P4])
        assert minor_minimal_filter([K4, K4.permuted([1, 0, 3, 2])]).same_classes([K4])

    def test_minimal_filter_result_is_antichain(self):
        rng = random.Random(7)
        pool = list(graphs_up_to(5))[1:]
        for _ in range(20):
            res = minor_minimal_filter(rng.sample(pool, 6))
            for a, b in itertools.permutations(res, 2):
                assert is_minor(a, b) is None


class TestCliqueDepthMinor:
    def test_examples(self):
        assert max_clique_depth_minor(K5, 0, 6) == 5
        assert max_clique_depth_minor(cycle_graph(6), 1, 4) == 3
        for tree in (P4, star_graph(4), path_graph(2)):
            for r in range(3):
                assert max_clique_depth_minor(tree, r, 4) == 2

    def test_cap_limits(self):
        assert max_clique_depth_minor(K5, 0, 3) == 3
