import itertools
import random
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from elimdist.canon import enumerate_graphs, graphs_up_to
from elimdist.distances import (EDGELESS, EMPTY_GRAPHS, FORESTS, ClassSpec, EditPlan,
                                check_elimination_tree, deletion_distance,
                                distance_independent_set, edit_distance, elimination_distance,
                                min_edit_distance, tree_depth)
from elimdist.fo import has_edge_sentence, parse_formula
from elimdist.graph import (complete_graph, cycle_graph, disjoint_union, empty_graph,
                            null_graph, path_graph, star_graph)
from elimdist.suites import brute_vertex_cover, run_suite

K1, K2, K3, K4 = (complete_graph(i) for i in range(1, 5))


def oracle_treedepth(g):
    """Tree-depth straight from the recursive definition on networkx graphs."""
    h = to_nx(g)

    @lru_cache(maxsize=None)
    def td(vs):
        if not vs:
            return 0
        sub = h.subgraph(vs)
        comps = list(nx.connected_components(sub))
        if len(comps) > 1:
            return max(td(frozenset(c)) for c in comps)
        return 1 + min(td(vs - {v}) for v in vs)

    return td(frozenset(h.nodes()))


def oracle_elimdist(g, member):
    h = to_nx(g)

    @lru_cache(maxsize=None)
    def ed(vs):
        sub, _ = g.induced_subgraph(sorted(vs))
        if member(sub):
            return 0
        comps = list(nx.connected_components(h.subgraph(vs)))
        if len(comps) > 1:
            return max(ed(frozenset(c)) for c in comps)
        return 1 + min(ed(vs - {v}) for v in vs)

    return ed(frozenset(h.nodes()))


def is_forest(g):
    return nx.is_forest(to_nx(g)) if g.n else True


class TestTreeDepth:
    def test_examples(self):
        assert tree_depth(null_graph()).value == 0
        assert tree_depth(K1).value == 1
        assert tree_depth(path_graph(4)).value == 3

    def test_matches_definition(self):
        for g in graphs_up_to(6):
            res = tree_depth(g)
            assert res.value == oracle_treedepth(g)
            assert res.witness.depth == res.value
            assert check_elimination_tree(g, EMPTY_GRAPHS, res.witness)

    def test_cap(self):
        res = tree_depth(K4, cap=3)
        assert res.exceeds_cap and res.value is None
        assert res.to_json() == {"value": "exceeds_cap", "witness": None}
        assert tree_depth(K4, cap=4).value == 4

    def test_recursion_identities(self):
        for g in enumerate_graphs(6):
            td = tree_depth(g).value
            if g.is_connected():
                assert td == 1 + min(tree_depth(g.delete_vertices([v])).value for v in range(g.n))

    def test_disconnected_is_max(self):
        g = disjoint_union(path_graph(4), K4, K1)
        assert tree_depth(g).value == 4

    def test_adding_edges_never_decreases(self):
        rng = random.Random(11)
        pool = list(graphs_up_to(6))
        for g in rng.sample(pool, 60):
            td = tree_depth(g).value
            for u, v in itertools.combinations(range(g.n), 2):
                if not g.has_edge(u, v):
                    assert tree_depth(g.add_edge(u, v)).value >= td


class TestEliminationDistance:
    def test_member_is_zero(self):
        res = elimination_distance(path_graph(5), FORESTS)
        assert res.value == 0 and res.witness.kind == "member"

    def test_two_triangles_to_forests(self):
        g = disjoint_union(K3, K3)
        res = elimination_distance(g, FORESTS, cap=3)
        assert res.value == 1
        assert check_elimination_tree(g, FORESTS, res.witness)

    def test_cap(self):
        assert elimination_distance(K4, FORESTS, cap=1).exceeds_cap
        assert elimination_distance(K4, FORESTS, cap=2).value == 2

    def test_equals_tree_depth(self):
        memo = {}
        for g in graphs_up_to(6):
            assert elimination_distance(g, EMPTY_GRAPHS, memo=memo).value == tree_depth(g).value

    @pytest.mark.parametrize("spec,member", [
        (FORESTS, is_forest),
        (EDGELESS, lambda g: g.num_edges == 0),
    ])
    def test_matches_definition(self, spec, member):
        for g in graphs_up_to(6):
            res = elimination_distance(g, spec)
            assert res.value == oracle_elimdist(g, member)
            assert check_elimination_tree(g, spec, res.witness)

    def test_formula_and_oracle_classes_agree(self):
        by_formula = ClassSpec.fo_formula(parse_formula("(forall u (forall v (not (E u v))))"))
        by_oracle = ClassSpec.from_oracle(lambda g: g.num_edges == 0)
        for g in graphs_up_to(5):
            want = elimination_distance(g, EDGELESS).value
            assert elimination_distance(g, by_formula).value == want
            assert elimination_distance(g, by_oracle).value == want

    def test_class_must_contain_null_graph(self):
        with pytest.raises(ValueError):
            ClassSpec.from_oracle(lambda g: g.n > 0)
        with pytest.raises(ValueError):
            ClassSpec.fo_formula(has_edge_sentence())

    def test_formula_class_needs_sentence(self):
        with pytest.raises(ValueError):
            ClassSpec.fo_formula(parse_formula("(E x y)"))

    def test_bad_witness_rejected(self):
        good = tree_depth(path_graph(3)).witness
        assert check_elimination_tree(path_graph(3), EMPTY_GRAPHS, good)
        assert not check_elimination_tree(K3, EMPTY_GRAPHS, good)


class TestDeletionDistance:
    def test_examples(self):
        assert deletion_distance(K3, EDGELESS).value == 2
        res = deletion_distance(star_graph(3), EDGELESS)
        assert res.value == 1 and res.witness == (0,)
        res = deletion_distance(path_graph(3), FORESTS)
        assert res.value == 0 and res.witness == ()

    def test_vertex_cover(self):
        for g in graphs_up_to(6):
            res = deletion_distance(g, EDGELESS)
            assert res.value == brute_vertex_cover(g)
            assert g.delete_vertices(res.witness).num_edges == 0

    def test_bounds_elimination_distance(self):
        for g in graphs_up_to(6):
            for spec in (EDGELESS, FORESTS):
                assert elimination_distance(g, spec).value <= deletion_distance(g, spec).value

    def test_cap(self):
        assert deletion_distance(K4, EDGELESS, cap=2).exceeds_cap


class TestEditDistance:
    def test_delete_edge(self):
        plan = edit_distance(K2, EDGELESS, (0, 1, 0))
        assert plan == EditPlan((), ((0, 1),), ())

    def test_add_edge(self):
        # "has an edge" must also admit the null graph to be a valid class
        spec = ClassSpec.from_oracle(lambda g: g.n == 0 or g.num_edges > 0)
        plan = edit_distance(empty_graph(2), spec, (0, 0, 1))
        assert plan.added_edges == ((0, 1),)

    def test_member_gets_empty_plan(self):
        plan = edit_distance(path_graph(4), FORESTS, (2, 2, 2))
        assert plan == EditPlan()

    def test_none_within_budget(self):
        assert edit_distance(K4, FORESTS, (0, 2, 0)) is None
        assert edit_distance(K4, FORESTS, (0, 3, 0)).cost == (0, 3, 0)

    def test_plans_replay_and_are_minimal(self):
        # to reach edgeless: delete a set S of at most one vertex, then every edge left
        for g in graphs_up_to(5):
            best = min((len(s) + g.delete_vertices(s).num_edges
                        for k in range(2) for s in itertools.combinations(range(g.n), k)
                        if g.delete_vertices(s).num_edges <= 2), default=None)
            plan = edit_distance(g, EDGELESS, (1, 2, 0))
            if plan is None:
                assert best is None
                continue
            assert EDGELESS.contains(plan.apply(g))
            assert sum(plan.cost) == best

    def test_scalar_wrapper(self):
        plan = min_edit_distance(star_graph(3), EDGELESS, 1, allow=(True, False, False))
        assert plan.deleted_vertices == (0,)
        assert min_edit_distance(star_graph(3), EDGELESS, 2, allow=(False, True, False)) is None


class TestDistanceIndependentSet:
    def test_examples(self):
        assert distance_independent_set(path_graph(5), 3, 2) == (0, 2, 4)
        assert distance_independent_set(K3, 2, 2) is None
        assert len(distance_independent_set(cycle_graph(4), 1, 9)) == 1
        assert distance_independent_set(null_graph(), 0, 3) == ()

    def test_disconnected_vertices_are_far_apart(self):
        assert distance_independent_set(empty_graph(3), 3, 100) == (0, 1, 2)

    def test_exhaustive_agreement(self):
        assert run_suite("dis", n_max=6).passed


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_result_json_shape(g):
    js = tree_depth(g).to_json()
    assert set(js) == {"value", "witness"}
    assert js["value"] == oracle_treedepth(g)
