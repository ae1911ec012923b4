"""The compiled kernels must agree exactly with the pure-Python ones."""

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from elimdist import _purekernels as pure
from elimdist import kernels
from elimdist.errors import BudgetExhausted
from elimdist.graph import complete_graph, path_graph

fast = pytest.importorskip("elimdist._speedups")

SETTINGS = settings(max_examples=60, deadline=None)


def test_backend_names():
    assert pure.BACKEND == "python"
    assert fast.BACKEND == "cython"
    assert kernels.BACKEND in ("python", "cython")


@SETTINGS
@given(graphs(max_n=10), st.integers(0, 2 ** 10 - 1))
def test_components_agree(g, mask):
    mask &= g.mask
    adj = list(g.adj)
    assert fast.components(adj, mask) == pure.components(adj, mask)


@SETTINGS
@given(graphs(min_n=1, max_n=10), st.integers(0, 2 ** 10 - 1), st.integers(0, 9))
def test_bfs_agree(g, mask, src):
    src %= g.n
    adj = list(g.adj)
    assert fast.bfs_distances(adj, mask & g.mask, src) == pure.bfs_distances(adj, mask & g.mask, src)


@SETTINGS
@given(graphs(max_n=8), st.integers(-1, 3))
def test_connected_subsets_agree(g, radius):
    adj = list(g.adj)
    assert fast.connected_subsets(adj, radius) == pure.connected_subsets(adj, radius)


@SETTINGS
@given(graphs(max_n=8), st.lists(st.integers(-1, 2), min_size=8, max_size=8))
def test_canonical_labeling_agree(g, colours):
    adj = list(g.adj)
    cols = colours[:g.n]
    assert fast.canonical_labeling(adj, cols) == pure.canonical_labeling(adj, cols)


@SETTINGS
@given(graphs(max_n=9))
def test_treedepth_agree(g):
    adj = list(g.adj)
    for limit in range(g.n + 1):
        assert fast.treedepth(adj, g.mask, limit, {}) == pure.treedepth(adj, g.mask, limit, {})


def _search_args(h, g):
    subsets = pure.connected_subsets(list(g.adj), -1)
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    return list(h.adj), order, [s[0] for s in subsets], [s[1] for s in subsets], g.mask


@SETTINGS
@given(graphs(min_n=1, max_n=4), graphs(max_n=7))
def test_minor_search_agree(h, g):
    args = _search_args(h, g)
    assert fast.minor_search(*args, 10 ** 6) == pure.minor_search(*args, 10 ** 6)


@pytest.mark.parametrize("mod", [pure, fast], ids=["python", "cython"])
def test_budget_exhaustion(mod):
    # K_3 is not a minor of a path, but refuting it takes more than one node
    args = _search_args(complete_graph(3), path_graph(6))
    assert mod.minor_search(*args, 10 ** 6) is None
    with pytest.raises(BudgetExhausted):
        mod.minor_search(*args, 1)


@pytest.mark.parametrize("mod", [pure, fast], ids=["python", "cython"])
def test_treedepth_of_paths(mod):
    # tree-depth of P_n is ceil(log2(n + 1))
    for n, td in [(1, 1), (3, 2), (7, 3), (15, 4)]:
        g = path_graph(n)
        assert mod.treedepth(list(g.adj), g.mask, n, {}) == td


def test_large_graphs_route_to_python():
    g = path_graph(70)
    order, code = kernels.canonical_labeling(list(g.adj), [-1] * 70)
    assert sorted(order) == list(range(70))
    with pytest.raises(ValueError):
        kernels.connected_subsets(list(g.adj), -1)
