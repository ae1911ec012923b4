"""Exhaustive cross-validation suites over all small graphs.

Each suite checks one equivalence between two independent computations on
every isomorphism class up to a vertex bound and reports the first
counterexample. The same suites back ``elimdist suite`` and the acceptance
tests.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .canon import connected_components, graphs_up_to
from .distances import (EMPTY_GRAPHS, ClassSpec, distance_independent_set,
                        elimination_distance, tree_depth)
from .fo import (And, Dist, Edge, Eq, Exists, ForAll, Implies, Not, Or, deletion_formula,
                 edgeless_sentence, evaluate, neq, relativise, treedepth_formula)
from .formats import write_graph6
from .graph import Graph, complete_graph, disjoint_union, empty_graph, path_graph
from .minors import ObstructionSet, excludes, is_depth_minor, is_minor
from .obstructions import (CkSpec, ck_membership, connection_closure,
                           enumerate_obstructions, union_closure_obstructions)


@dataclass
class SuiteResult:
    name: str
    graphs: int = 0
    checks: int = 0
    failures: int = 0
    counterexample: str | None = None
    detail: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, g: Graph | None, detail: str):
        self.failures += 1
        if self.counterexample is None and not self.detail:
            self.counterexample = None if g is None else write_graph6(g)
            self.detail = detail

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "graphs": self.graphs,
            "checks": self.checks,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


K1, K2, K3 = complete_graph(1), complete_graph(2), complete_graph(3)


def suite_td_elim(n_max=7, **_):
    """Tree-depth equals elimination distance to the class of empty graphs."""
    res = SuiteResult("td-elim")
    memo = {}
    for g in graphs_up_to(n_max):
        res.graphs += 1
        res.checks += 1
        a = tree_depth(g).value
        b = elimination_distance(g, EMPTY_GRAPHS, memo=memo).value
        if a != b:
            res.fail(g, f"tree-depth {a} but elimination distance {b}")
    return res


def suite_char_ck(n_max=6, k_max=2, **_):
    """C_k membership iff elimination distance at most k (bases K_3 and K_2)."""
    res = SuiteResult("char-ck")
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    for base in (K3, K2):
        spec = ClassSpec.excluded_minors([base])
        ed_memo, ck_memo = {}, {}
        for g in graphs:
            ed = elimination_distance(g, spec, memo=ed_memo).value
            for k in range(k_max + 1):
                res.checks += 1
                ck = ck_membership(g, CkSpec(spec.obstructions, k), memo=ck_memo)
                if ck != (ed <= k):
                    res.fail(g, f"base {write_graph6(base)} k={k}: C_k says {ck}, ed={ed}")
    return res


def suite_td_formula(n_max=6, k_max=3, **_):
    """The tree-depth sentence for k holds iff tree-depth is at most k."""
    res = SuiteResult("td-formula")
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    formulas = [treedepth_formula(k) for k in range(k_max + 1)]
    for g in graphs:
        td = tree_depth(g).value
        for k, phi in enumerate(formulas):
            res.checks += 1
            if evaluate(phi, g) != (td <= k):
                res.fail(g, f"k={k}: formula disagrees with tree-depth {td}")
    return res


def brute_vertex_cover(g: Graph) -> int:
    edges = g.edges()
    for size in range(g.n + 1):
        for s in itertools.combinations(range(g.n), size):
            chosen = set(s)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    raise AssertionError("unreachable")


def suite_del_formula(n_max=6, k_max=3, **_):
    """Deletion sentence over 'edgeless' holds iff the vertex cover number is at most k."""
    res = SuiteResult("del-formula")
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    formulas = [deletion_formula(edgeless_sentence(), k) for k in range(k_max + 1)]
    for g in graphs:
        vc = brute_vertex_cover(g)
        for k, phi in enumerate(formulas):
            res.checks += 1
            if evaluate(phi, g) != (vc <= k):
                res.fail(g, f"k={k}: formula disagrees with vertex cover {vc}")
    return res


def _component_wise(g: Graph, obs) -> bool:
    return all(excludes(comp, obs) for comp, _ in connected_components(g))


def suite_union_closure(n_max=6, bases=None, **_):
    """Union-closure obstructions characterise component-wise membership."""
    res = SuiteResult("union-closure")
    got = union_closure_obstructions([empty_graph(2)])
    res.checks += 1
    if not got.same_classes([K2]):
        res.fail(None, "union closure of {2K_1} is not {K_2}")
    if bases is None:
        bases = [[empty_graph(2)], [disjoint_union(K3, K1)]]
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    for base in bases:
        closed = union_closure_obstructions(base)
        for g in graphs:
            res.checks += 1
            if excludes(g, closed) != _component_wise(g, base):
                res.fail(g, f"base {[write_graph6(b) for b in base]}: union closure disagrees")
    return res


def suite_cc_edges(n_max=6, **_):
    """Every connection-closure graph has e + m - 1 edges."""
    res = SuiteResult("cc-edges")
    for g in graphs_up_to(n_max):
        res.graphs += 1
        if g.n == 0:
            continue
        m = len(connected_components(g))
        for h in connection_closure(g):
            res.checks += 1
            if h.num_edges != g.num_edges + m - 1 or not h.is_connected():
                res.fail(g, f"closure member with {h.num_edges} edges")
    return res


def suite_enum_obstructions(n_max=5, **_):
    """Bounded enumeration for tree-depth <= 2 yields {K_3, P_4}, checked one size beyond."""
    res = SuiteResult("enum-obstructions")
    expected = [K3, path_graph(4)]
    got = enumerate_obstructions(lambda g: tree_depth(g, 2).value is not None, n_max)
    res.checks += 1
    if not got.same_classes(expected):
        res.fail(None, f"enumerated {[write_graph6(h) for h in got]}")
    # ground truth: tree-depth <= 2 is exactly "no K_3 and no P_4 minor"
    for g in graphs_up_to(n_max + 1):
        res.graphs += 1
        res.checks += 1
        if (tree_depth(g, 2).value is not None) != excludes(g, expected):
            res.fail(g, "tree-depth <= 2 disagrees with excluding K_3 and P_4")
    return res


def suite_depth_deletion(n_max=6, s_max=2, r_max=2, m_max=3, **_):
    """K_m not a depth-r minor of G - S implies K_{m+|S|} not a depth-r minor of G."""
    res = SuiteResult("depth-deletion")
    cliques = [complete_graph(m) for m in range(m_max + s_max + 1)]
    for g in graphs_up_to(n_max):
        res.graphs += 1
        for size in range(min(s_max, g.n) + 1):
            for s in itertools.combinations(range(g.n), size):
                rest = g.delete_vertices(s)
                for r in range(r_max + 1):
                    for m in range(m_max + 1):
                        res.checks += 1
                        if is_depth_minor(cliques[m], rest, r) is None:
                            if is_depth_minor(cliques[m + size], g, r) is not None:
                                res.fail(g, f"S={s} r={r} m={m}")
    return res


def relativisation_pools():
    """Fixed sentence and unary-guard pools used for the relativisation suite."""
    sentences = [
        Exists("u", Exists("v", Edge("u", "v"))),
        edgeless_sentence(),
        ForAll("u", Exists("v", Edge("u", "v"))),
        Exists("u", ForAll("v", Or((Eq("u", "v"), Edge("u", "v"))))),
        Exists("u", Exists("v", Exists("w", And((Edge("u", "v"), Edge("v", "w"), Edge("u", "w")))))),
        ForAll("u", ForAll("v", Dist("u", "v", 2))),
        ForAll("u", ForAll("v", Implies(Dist("u", "v", 3), Dist("u", "v", 1)))),
        Exists("u", Exists("v", And((neq("u", "v"), Not(Dist("u", "v", 2)))))),
        Not(Exists("v", Eq("v", "v"))),
        Exists("u", Exists("v", And((neq("u", "v"), ForAll("w", And((
            Implies(Edge("u", "w"), Or((Eq("w", "v"), Edge("v", "w")))),
            Implies(Edge("v", "w"), Or((Eq("w", "u"), Edge("u", "w")))),
        ))))))),
        treedepth_formula(1),
        treedepth_formula(2),
        deletion_formula(edgeless_sentence(), 1),
    ]
    guards = [
        Eq("x", "x"),
        Exists("y", Edge("x", "y")),
        Not(Exists("y", Exists("z", And((neq("y", "z"), Edge("x", "y"), Edge("x", "z")))))),
        Exists("y", And((Edge("x", "y"), Exists("z", And((Edge("y", "z"), neq("z", "x"), Not(Edge("x", "z")))))))),
        Exists("y", Not(Dist("x", "y", 1))),
    ]
    return sentences, guards


def suite_relativisation(n_max=5, **_):
    """Relativised evaluation equals evaluation on the induced subgraph."""
    res = SuiteResult("relativisation")
    sentences, guards = relativisation_pools()
    rel = [[relativise(phi, psi, "x") for phi in sentences] for psi in guards]
    for g in graphs_up_to(n_max):
        res.graphs += 1
        for gi, psi in enumerate(guards):
            keep = [v for v in range(g.n) if evaluate(psi, g, {"x": v})]
            sub, _ = g.induced_subgraph(keep)
            for si, phi in enumerate(sentences):
                res.checks += 1
                if evaluate(rel[gi][si], g) != evaluate(phi, sub):
                    res.fail(g, f"sentence {si} under guard {gi}")
    return res


def _all_pairs(g: Graph):
    dist = [[0 if u == v else (1 if g.has_edge(u, v) else math.inf) for v in range(g.n)]
            for u in range(g.n)]
    for w in range(g.n):
        for u in range(g.n):
            for v in range(g.n):
                if dist[u][w] + dist[w][v] < dist[u][v]:
                    dist[u][v] = dist[u][w] + dist[w][v]
    return dist


def suite_dis(n_max=6, k_max=3, r_max=4, **_):
    """The r-independent set solver agrees with exhaustive subset enumeration."""
    res = SuiteResult("dis")
    for g in graphs_up_to(n_max):
        res.graphs += 1
        dist = _all_pairs(g)
        for k in range(k_max + 1):
            for r in range(r_max + 1):
                res.checks += 1
                exists = any(all(dist[a][b] >= r for a, b in itertools.combinations(s, 2))
                             for s in itertools.combinations(range(g.n), k))
                got = distance_independent_set(g, k, r)
                if got is None:
                    ok = not exists
                else:
                    ok = (len(set(got)) == k and all(0 <= v < g.n for v in got)
                          and all(dist[a][b] >= r for a, b in itertools.combinations(got, 2)))
                if not ok:
                    res.fail(g, f"k={k} r={r}: solver gave {got}, exhaustive says {exists}")
    return res


def suite_minor_transitivity(n_max=5, samples=300, seed=0, **_):
    """Sampled transitivity of the minor relation over random triples."""
    res = SuiteResult("minor-transitivity")
    rng = random.Random(seed)
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    for _ in range(samples):
        a, b, c = (rng.choice(graphs) for _ in range(3))
        if is_minor(a, b) is not None and is_minor(b, c) is not None:
            res.checks += 1
            if is_minor(a, c) is None:
                res.fail(c, f"{write_graph6(a)} <= {write_graph6(b)} <= {write_graph6(c)}")
    return res


def suite_ck_closed(n_max=5, k_max=2, **_):
    """C_k is minor-closed: membership passes to every one-step minor."""
    from .minors import one_step_minors

    res = SuiteResult("ck-closed")
    graphs = list(graphs_up_to(n_max))
    res.graphs = len(graphs)
    for base in (K3, K2):
        for k in range(k_max + 1):
            spec = CkSpec(ObstructionSet((base,)), k)
            memo = {}
            for g in graphs:
                if ck_membership(g, spec, memo=memo):
                    for h in one_step_minors(g):
                        res.checks += 1
                        if not ck_membership(h, spec, memo=memo):
                            res.fail(g, f"base {write_graph6(base)} k={k}: minor {write_graph6(h)} leaves C_k")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "td-elim": suite_td_elim,
    "char-ck": suite_char_ck,
    "td-formula": suite_td_formula,
    "del-formula": suite_del_formula,
    "union-closure": suite_union_closure,
    "cc-edges": suite_cc_edges,
    "enum-obstructions": suite_enum_obstructions,
    "depth-deletion": suite_depth_deletion,
    "relativisation": suite_relativisation,
    "dis": suite_dis,
    "minor-transitivity": suite_minor_transitivity,
    "ck-closed": suite_ck_closed,
}


def run_suite(name: str, **params) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}") from None
    return fn(**{k: v for k, v in params.items() if v is not None})
