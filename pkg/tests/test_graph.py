import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import from_nx, graphs, to_nx
from elimdist.canon import (canonical_form, canonical_graph, connected_components,
                            enumerate_graphs, graphs_up_to, is_isomorphic)
from elimdist.errors import GraphFormatError
from elimdist.formats import (graph_from_json, graph_from_line, graph_to_json, graph_to_line,
                              parse_edge_list, parse_graph6, parse_graphs, write_edge_list,
                              write_graph6)
from elimdist.graph import (Graph, bfs_distance, complete_graph, cycle_graph, disjoint_union,
                            empty_graph, null_graph, path_graph, star_graph)


class TestGraph:
    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range_colour(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [], colours=[0, 3], num_colours=2)

    def test_null_graph(self):
        g = null_graph()
        assert g.n == 0 and g.num_edges == 0 and g.edges() == []
        assert g.is_connected()

    def test_builders(self):
        assert complete_graph(4).num_edges == 6
        assert path_graph(4).num_edges == 3
        assert cycle_graph(5).num_edges == 5
        assert star_graph(3).degree(0) == 3
        assert empty_graph(4).num_edges == 0

    def test_contract_merges_neighbourhoods(self):
        g = path_graph(4).contract_edge(1, 2)
        assert g.n == 3 and is_isomorphic(g, path_graph(3))

    def test_contract_non_edge_raises(self):
        with pytest.raises(ValueError):
            path_graph(3).contract_edge(0, 2)

    def test_induced_subgraph_map(self):
        sub, vmap = cycle_graph(5).induced_subgraph([4, 0, 1])
        assert vmap == (0, 1, 4)
        assert is_isomorphic(sub, path_graph(3))

    def test_disjoint_union_keeps_components(self):
        g = disjoint_union(complete_graph(3), path_graph(2), null_graph())
        assert g.n == 5 and g.num_edges == 4
        assert len(connected_components(g)) == 2

    def test_bfs_distance(self):
        g = path_graph(5)
        assert bfs_distance(g, 0, 4) == 4
        assert bfs_distance(g, 0, 4, allowed=[0, 1, 2]) == math.inf
        assert bfs_distance(disjoint_union(g, g), 0, 5) == math.inf
        assert bfs_distance(g, 2, 2) == 0


class TestGraph6:
    @pytest.mark.parametrize("text,expected", [
        ("?", null_graph()),
        ("@", complete_graph(1)),
        ("A_", complete_graph(2)),
        ("Bg", path_graph(3)),
    ])
    def test_known_strings(self, text, expected):
        g = parse_graph6(text)
        assert g == expected
        assert write_graph6(expected) == text

    def test_header_is_accepted(self):
        assert parse_graph6(">>graph6<<Bg") == path_graph(3)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=12))
    def test_matches_networkx(self, g):
        ours = write_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs
        assert parse_graph6(theirs) == g

    @pytest.mark.parametrize("n", [62, 63, 70, 300])
    def test_long_size_prefixes(self, n):
        g = path_graph(n)
        text = write_graph6(g)
        assert text == nx.to_graph6_bytes(nx.path_graph(n), header=False).decode().strip()
        assert parse_graph6(text) == g

    def test_bad_byte_reports_offset(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6("B\x01")
        assert exc.value.offset == 1

    def test_truncated_input(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("D")

    def test_parse_error_carries_line(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graphs("Bg\nB\x01\n", "graph6")
        assert exc.value.line == 2

    def test_coloured_line_round_trip(self):
        g = Graph.from_edges(3, [(0, 1)], colours=[0, None, 1], num_colours=2)
        assert graph_from_line(graph_to_line(g)) == g

    def test_json_round_trip(self):
        g = Graph.from_edges(3, [(0, 2)], colours={1: 0}, num_colours=1)
        assert graph_from_json(graph_to_json(g)) == g


class TestEdgeList:
    def test_blocks_and_comments(self):
        text = "# two graphs\n3 2\n0 1\n1 2\n\n0 0\n"
        gs = parse_edge_list(text)
        assert gs == [path_graph(3), null_graph()]
        assert parse_graphs(text) == gs

    def test_round_trip(self):
        g = cycle_graph(5)
        assert parse_edge_list(write_edge_list(g)) == [g]

    def test_error_line_number(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_edge_list("3 1\n0 5\n")
        assert exc.value.line == 2

    def test_missing_edges(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("3 2\n0 1\n")


class TestCanonical:
    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    def test_invariant_under_relabelling(self, g, rnd):
        order = list(range(g.n))
        rnd.shuffle(order)
        h = g.permuted(order)
        assert canonical_form(h) == canonical_form(g)
        assert canonical_graph(h) == canonical_graph(g)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7), graphs(max_n=7))
    def test_isomorphism_matches_networkx(self, g, h):
        if g.n == h.n:
            assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_canonical_graph_is_isomorphic(self):
        g = disjoint_union(cycle_graph(4), star_graph(2))
        assert is_isomorphic(canonical_graph(g), g)

    def test_colours_distinguish(self):
        a = Graph.from_edges(2, [(0, 1)], colours=[0, None], num_colours=1)
        b = Graph.from_edges(2, [(0, 1)], colours=[None, 0], num_colours=1)
        c = Graph.from_edges(2, [(0, 1)], colours=[0, 0], num_colours=1)
        assert is_isomorphic(a, b)
        assert not is_isomorphic(a, c)

    def test_regular_graphs_are_separated(self):
        # C_6 and 2K_3 are both 2-regular, so refinement alone cannot separate them
        assert not is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)))


class TestEnumeration:
    def test_counts(self):
        assert [sum(1 for _ in enumerate_graphs(n)) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]
        assert sum(1 for _ in graphs_up_to(7)) == 1253

    def test_connected_counts(self):
        assert [sum(1 for _ in enumerate_graphs(n, True)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]

    def test_matches_graph_atlas(self):
        atlas = {canonical_form(from_nx(h)) for h in nx.graph_atlas_g()}
        ours = {canonical_form(g) for g in graphs_up_to(7)}
        assert ours == atlas

    def test_no_duplicates(self):
        codes = [canonical_form(g) for g in enumerate_graphs(6)]
        assert len(set(codes)) == len(codes)

    def test_null_graph_first(self):
        assert next(iter(graphs_up_to(3))) == null_graph()

    def test_components_cover_vertices(self):
        for g in enumerate_graphs(6):
            parts = connected_components(g)
            seen = sorted(v for _, vmap in parts for v in vmap)
            assert seen == list(range(g.n))
            assert all(sub.is_connected() and sub.n > 0 for sub, _ in parts)
            assert sum(sub.num_edges for sub, _ in parts) == g.num_edges
