import itertools
import json

import networkx as nx
import pytest

from conftest import to_nx
from elimdist.canon import canonical_form, graphs_up_to, is_isomorphic
from elimdist.distances import FORESTS, elimination_distance, tree_depth
from elimdist.errors import InvalidObstructionSet, NotMinorClosedError
from elimdist.graph import (Graph, complete_graph, cycle_graph, disjoint_union, empty_graph,
                            null_graph, path_graph)
from elimdist.minors import ObstructionSet, excludes, is_minor, one_step_minors
from elimdist.obstructions import (Apex, CkSpec, apex_membership, ck_membership, ck_obstructions,
                                   connection_closure, enumerate_obstructions, is_union_closed,
                                   read_obstruction_file, union_closure_obstructions,
                                   write_obstruction_file)
from elimdist.suites import run_suite

K1, K2, K3, K4 = (complete_graph(i) for i in range(1, 5))
P3, P4 = path_graph(3), path_graph(4)
PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def obs(*graphs):
    return ObstructionSet.of(graphs)


def oracle_closure(g):
    """Connected graphs on V(g) with e + m - 1 edges that keep every component induced."""
    comps = [set(c) for c in nx.connected_components(to_nx(g))]
    where = {v: i for i, c in enumerate(comps) for v in c}
    cross = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if where[u] != where[v]]
    found = set()
    for extra in itertools.combinations(cross, len(comps) - 1):
        h = g
        for u, v in extra:
            h = h.add_edge(u, v)
        if h.is_connected():
            found.add(canonical_form(h))
    return found


class TestConnectionClosure:
    def test_examples(self):
        assert connection_closure(P4) == [P4]
        [h] = connection_closure(empty_graph(2))
        assert is_isomorphic(h, K2)
        [h] = connection_closure(disjoint_union(K2, K1))
        assert is_isomorphic(h, P3)

    def test_null_graph_rejected(self):
        with pytest.raises(ValueError):
            connection_closure(null_graph())

    def test_matches_exhaustive_edge_choice(self):
        for g in graphs_up_to(6):
            if g.n == 0:
                continue
            ours = connection_closure(g)
            assert {canonical_form(h) for h in ours} == oracle_closure(g)
            assert len(ours) == len({canonical_form(h) for h in ours})

    def test_edge_count_suite(self):
        assert run_suite("cc-edges", n_max=6).passed


class TestUnionClosure:
    def test_examples(self):
        assert union_closure_obstructions(obs(K3)).same_classes([K3])
        assert union_closure_obstructions(obs(empty_graph(2))).same_classes([K2])
        assert union_closure_obstructions(obs(disjoint_union(K3, K1))).same_classes([PAW])

    def test_component_wise_oracle(self):
        bases = [[empty_graph(2)], [disjoint_union(K3, K1)], [K3]]
        assert run_suite("union-closure", n_max=6, bases=bases).passed

    def test_partiality_is_kept(self):
        base = ObstructionSet((empty_graph(2),), partial_up_to=4)
        assert union_closure_obstructions(base).partial_up_to == 4

    def test_is_union_closed(self):
        assert is_union_closed(obs(K3))
        assert not is_union_closed(obs(empty_graph(2)))
        assert is_union_closed(ObstructionSet(()))

    def test_connected_obstructions_give_union_closed_classes(self):
        small = list(graphs_up_to(4))
        for members in ([K3], [P3], [K2], [cycle_graph(4)]):
            for g, h in itertools.product(small, repeat=2):
                if excludes(g, members) and excludes(h, members):
                    assert excludes(disjoint_union(g, h), members)


class TestApex:
    def test_examples(self):
        v = apex_membership(cycle_graph(4), obs(K3))
        assert isinstance(v, int) and excludes(cycle_graph(4).delete_vertices([v]), [K3])
        assert apex_membership(K4, obs(K3)) is None
        assert apex_membership(K1, obs(K3)) == 0
        assert apex_membership(null_graph(), obs(K3)) is Apex.VACUOUS

    def test_members_are_apex(self):
        for g in graphs_up_to(5):
            if excludes(g, [K3]):
                assert apex_membership(g, obs(K3)) is not None


class TestCkMembership:
    def test_examples(self):
        spec0 = CkSpec(obs(K3), 0)
        for g in graphs_up_to(5):
            assert ck_membership(g, spec0) == excludes(g, [K3])
        assert ck_membership(disjoint_union(K3, K3), CkSpec(obs(K3), 1))
        assert not ck_membership(K4, CkSpec(obs(K3), 1))
        assert ck_membership(K4, CkSpec(obs(K3), 2))

    def test_null_graph_always_member(self):
        for k in range(3):
            assert ck_membership(null_graph(), CkSpec(obs(K2), k))

    def test_negative_k(self):
        with pytest.raises(ValueError):
            CkSpec(obs(K3), -1)

    def test_characterisation(self):
        assert run_suite("char-ck", n_max=6, k_max=2).passed

    def test_minor_closed(self):
        assert run_suite("ck-closed", n_max=5, k_max=2).passed


class TestEnumeration:
    def test_examples(self):
        assert enumerate_obstructions(lambda g: g.num_edges == 0, 3).same_classes([K2])
        assert enumerate_obstructions(lambda g: excludes(g, [K3]), 4).same_classes([K3])
        got = enumerate_obstructions(lambda g: tree_depth(g, 2).value is not None, 5)
        assert got.same_classes([K3, P4])
        assert got.partial_up_to == 5

    def test_output_is_antichain_of_minimal_non_members(self):
        def member(g):
            return elimination_distance(g, FORESTS, cap=1).value is not None

        got = enumerate_obstructions(member, 6)
        for a, b in itertools.permutations(got, 2):
            assert is_minor(a, b) is None
        for h in got:
            assert not member(h)
            assert all(member(m) for m in one_step_minors(h))

    def test_not_minor_closed(self):
        with pytest.raises(NotMinorClosedError) as exc:
            enumerate_obstructions(lambda g: g.num_edges != 1, 3)
        assert exc.value.member.num_edges != 1

    def test_membership_must_accept_null_graph(self):
        with pytest.raises(ValueError):
            enumerate_obstructions(lambda g: g.n > 0, 2)

    def test_suite(self):
        assert run_suite("enum-obstructions", n_max=5).passed


class TestCkObstructions:
    def test_zero_is_passthrough(self):
        base = obs(K3)
        assert ck_obstructions(CkSpec(base, 0), 5) is base

    def test_tree_depth_two(self):
        got = ck_obstructions(CkSpec(obs(K2), 1), 5)
        assert got.same_classes([K3, P4])
        assert got.partial_up_to == 5

    def test_apex_forest_agrees_with_membership(self):
        spec = CkSpec(obs(K3), 1)
        got = ck_obstructions(spec, 5)
        memo = {}
        for g in graphs_up_to(5):
            assert excludes(g, got) == ck_membership(g, spec, memo=memo)


class TestFiles:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "obs.g6"
        got = ck_obstructions(CkSpec(obs(K2), 1), 5)
        side = write_obstruction_file(path, got, base=["A_"], k=1)
        assert json.loads(side.read_text()) == {"base": ["A_"], "k": 1, "partial_up_to": 5}
        back = read_obstruction_file(path)
        assert back.same_classes(got) and back.partial_up_to == 5

    def test_without_sidecar(self, tmp_path):
        path = tmp_path / "obs.g6"
        path.write_text("Bw\n")
        back = read_obstruction_file(path)
        assert back.partial_up_to is None and back.same_classes([K3])

    def test_invalid_set_rejected(self, tmp_path):
        path = tmp_path / "obs.g6"
        path.write_text("Bw\nC~\n")
        with pytest.raises(InvalidObstructionSet):
            read_obstruction_file(path)
