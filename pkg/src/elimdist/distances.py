"""Exact distances from a graph to a graph class.

Tree-depth, elimination distance, vertex-deletion distance, combined
vertex/edge edit distance, and distance-r independent sets. All searches are
exhaustive; ``cap`` bounds how far they look.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from . import kernels
from .canon import canonical_form, connected_components
from .graph import Graph, complete_graph, null_graph
from .minors import ObstructionSet, excludes

NULL = null_graph()


@dataclass(frozen=True)
class ClassSpec:
    """A graph class given by excluded minors, a first-order sentence or a predicate.

    Use the ``excluded_minors``, ``fo_formula`` and ``from_oracle``
    constructors. Every class must contain the null graph, otherwise
    elimination distance is undefined; this is checked on construction.
    """

    kind: Literal["excluded_minors", "fo_formula", "oracle"]
    obstructions: ObstructionSet | None = None
    formula: object = None
    oracle: Callable[[Graph], bool] | None = field(default=None, compare=False)
    name: str | None = None
    budget: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == "excluded_minors":
            if self.obstructions is None:
                raise ValueError("excluded_minors class needs an obstruction set")
        elif self.kind == "fo_formula":
            from .fo import is_sentence

            if self.formula is None or not is_sentence(self.formula):
                raise ValueError("fo_formula class needs a sentence")
        elif self.kind == "oracle":
            if self.oracle is None:
                raise ValueError("oracle class needs a predicate")
        else:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if not self.contains(NULL):
            raise ValueError("graph classes must contain the null graph")

    @classmethod
    def excluded_minors(cls, graphs: Iterable[Graph], name: str | None = None,
                        budget: int | None = None) -> ClassSpec:
        obs = graphs if isinstance(graphs, ObstructionSet) else ObstructionSet.of(graphs, budget=budget)
        return cls("excluded_minors", obstructions=obs, name=name, budget=budget)

    @classmethod
    def fo_formula(cls, sentence, name: str | None = None) -> ClassSpec:
        return cls("fo_formula", formula=sentence, name=name)

    @classmethod
    def from_oracle(cls, predicate: Callable[[Graph], bool], name: str | None = None) -> ClassSpec:
        return cls("oracle", oracle=predicate, name=name)

    def contains(self, g: Graph) -> bool:
        if self.kind == "excluded_minors":
            return excludes(g, self.obstructions, self.budget)
        if self.kind == "fo_formula":
            from .fo import evaluate

            return evaluate(self.formula, g)
        return bool(self.oracle(g))


EMPTY_GRAPHS = ClassSpec.excluded_minors([complete_graph(1)], name="empty")
EDGELESS = ClassSpec.excluded_minors([complete_graph(2)], name="edgeless")
FORESTS = ClassSpec.excluded_minors([complete_graph(3)], name="forests")


@dataclass(frozen=True)
class EliminationTree:
    """Witness mirroring the three cases of elimination distance.

    ``member``: the induced graph on ``vertices`` lies in the class.
    ``split``: it is disconnected; one child per component.
    ``delete``: it is connected; ``vertex`` is removed and the single child
    covers the rest.
    """

    kind: Literal["member", "split", "delete"]
    vertices: frozenset[int]
    vertex: int | None = None
    children: tuple[EliminationTree, ...] = ()

    @property
    def depth(self) -> int:
        if self.kind == "member":
            return 0
        if self.kind == "split":
            return max(c.depth for c in self.children)
        return 1 + self.children[0].depth

    def to_json(self):
        out = {"kind": self.kind, "vertices": sorted(self.vertices)}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out


@dataclass(frozen=True)
class EditPlan:
    """Vertex deletions plus edge deletions/additions, in original labels."""

    deleted_vertices: tuple[int, ...] = ()
    deleted_edges: tuple[tuple[int, int], ...] = ()
    added_edges: tuple[tuple[int, int], ...] = ()

    @property
    def cost(self) -> tuple[int, int, int]:
        return len(self.deleted_vertices), len(self.deleted_edges), len(self.added_edges)

    def apply(self, g: Graph) -> Graph:
        for u, v in self.deleted_edges:
            g = g.delete_edge(u, v)
        for u, v in self.added_edges:
            g = g.add_edge(u, v)
        return g.delete_vertices(self.deleted_vertices)

    def to_json(self):
        return {
            "deleted_vertices": list(self.deleted_vertices),
            "deleted_edges": [list(e) for e in self.deleted_edges],
            "added_edges": [list(e) for e in self.added_edges],
        }


@dataclass(frozen=True)
class DistanceResult:
    """``value`` is None when the distance exceeds ``cap``."""

    value: int | None
    cap: int
    witness: object = None

    @property
    def exceeds_cap(self) -> bool:
        return self.value is None

    def to_json(self):
        w = self.witness
        if isinstance(w, (EliminationTree, EditPlan)):
            w = w.to_json()
        elif isinstance(w, (tuple, frozenset)):
            w = sorted(w)
        return {"value": "exceeds_cap" if self.value is None else self.value, "witness": w}


def _by_degree(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def tree_depth(g: Graph, cap: int | None = None) -> DistanceResult:
    """Exact tree-depth via memoised search over induced vertex subsets."""
    cap = g.n if cap is None else cap
    adj = list(g.adj)
    memo = {}
    val = kernels.treedepth(adj, g.mask, cap, memo)
    if val > cap:
        return DistanceResult(None, cap)

    def build(mask, value):
        verts = frozenset(v for v in range(g.n) if (mask >> v) & 1)
        if mask == 0:
            return EliminationTree("member", verts)
        comps = kernels.components(adj, mask)
        if len(comps) > 1:
            return EliminationTree(
                "split", verts,
                children=tuple(build(c, kernels.treedepth(adj, c, value, memo)) for c in comps),
            )
        for v in sorted(verts, key=lambda v: (-kernels.popcount(adj[v] & mask), v)):
            rest = mask & ~(1 << v)
            if kernels.treedepth(adj, rest, value - 1, memo) == value - 1:
                return EliminationTree("delete", verts, v, (build(rest, value - 1),))
        raise AssertionError("tree-depth witness reconstruction failed")

    return DistanceResult(val, cap, build(g.mask, val))


class _Eliminator:
    """Elimination-distance search memoised on canonical codes.

    ``memo`` maps a code to ``(value, exact)``; inexact entries are lower
    bounds. Concurrent users of a shared memo only ever write values that are
    correct for their key, so racing writers are harmless.
    """

    def __init__(self, spec: ClassSpec, memo: dict | None):
        self.spec = spec
        self.memo = {} if memo is None else memo

    def member(self, g: Graph, code: bytes) -> bool:
        key = ("member", code)
        hit = self.memo.get(key)
        if hit is None:
            hit = self.spec.contains(g)
            self.memo[key] = hit
        return hit

    def bounded(self, g: Graph, limit: int) -> int:
        """ed(g) if at most ``limit``, else ``limit + 1``."""
        code = canonical_form(g)
        if self.member(g, code):
            return 0
        if limit <= 0:
            return 1
        hit = self.memo.get(code)
        if hit is not None:
            val, exact = hit
            if exact:
                return min(val, limit + 1)
            if val > limit:
                return limit + 1
        comps = connected_components(g)
        if len(comps) > 1:
            res = 0
            for comp, _ in comps:
                t = self.bounded(comp, limit)
                if t > limit:
                    self.memo[code] = (limit + 1, False)
                    return limit + 1
                res = max(res, t)
            self.memo[code] = (res, True)
            return res
        best = limit + 1
        for v in _by_degree(g):
            if best <= 1:
                break
            t = self.bounded(g.delete_vertices([v]), best - 2)
            if t <= best - 2:
                best = t + 1
        self.memo[code] = (best, True) if best <= limit else (limit + 1, False)
        return best

    def build(self, g: Graph, labels: tuple[int, ...], value: int) -> EliminationTree:
        verts = frozenset(labels)
        if self.member(g, canonical_form(g)):
            return EliminationTree("member", verts)
        comps = connected_components(g)
        if len(comps) > 1:
            kids = []
            for comp, vmap in sorted(comps, key=lambda t: t[1][0]):
                kids.append(self.build(comp, tuple(labels[i] for i in vmap),
                                       self.bounded(comp, value)))
            return EliminationTree("split", verts, children=tuple(kids))
        for v in _by_degree(g):
            rest, vmap = g.induced_subgraph(u for u in range(g.n) if u != v)
            if self.bounded(rest, value - 1) == value - 1:
                return EliminationTree(
                    "delete", verts, labels[v],
                    (self.build(rest, tuple(labels[i] for i in vmap), value - 1),),
                )
        raise AssertionError("elimination witness reconstruction failed")


def elimination_distance(g: Graph, spec: ClassSpec, cap: int | None = None,
                         memo: dict | None = None) -> DistanceResult:
    """Exact elimination distance of ``g`` to the class, if at most ``cap``.

    Pass the same ``memo`` dict to several calls with the same class to
    share work between them.
    """
    cap = g.n if cap is None else cap
    solver = _Eliminator(spec, memo)
    val = solver.bounded(g, cap)
    if val > cap:
        return DistanceResult(None, cap)
    return DistanceResult(val, cap, solver.build(g, tuple(range(g.n)), val))


def check_elimination_tree(g: Graph, spec: ClassSpec, tree: EliminationTree) -> bool:
    """Replay a witness: every case must hold on the induced subgraph it names."""
    sub, _ = g.induced_subgraph(tree.vertices)
    if tree.kind == "member":
        return spec.contains(sub)
    comps = kernels.components(list(g.adj), sum(1 << v for v in tree.vertices))
    if tree.kind == "split":
        want = sorted(frozenset(v for v in range(g.n) if (c >> v) & 1) for c in comps)
        got = sorted(c.vertices for c in tree.children)
        return len(comps) > 1 and [sorted(s) for s in want] == [sorted(s) for s in got] and all(
            check_elimination_tree(g, spec, c) for c in tree.children)
    if len(comps) != 1 or tree.vertex not in tree.vertices or len(tree.children) != 1:
        return False
    child = tree.children[0]
    return child.vertices == tree.vertices - {tree.vertex} and check_elimination_tree(g, spec, child)


def deletion_distance(g: Graph, spec: ClassSpec, cap: int | None = None) -> DistanceResult:
    """Smallest vertex set whose deletion lands in the class; witness is that set."""
    cap = g.n if cap is None else cap
    order = _by_degree(g)
    for size in range(min(cap, g.n) + 1):
        for s in itertools.combinations(order, size):
            if spec.contains(g.delete_vertices(s)):
                return DistanceResult(size, cap, tuple(sorted(s)))
    return DistanceResult(None, cap)


def edit_distance(g: Graph, spec: ClassSpec,
                  budget: tuple[int, int, int] = (0, 0, 0)) -> EditPlan | None:
    """Cheapest edit plan within ``(vertex_deletions, edge_deletions, edge_additions)``.

    Plans are tried in order of total size, so the returned plan has the
    fewest edits among those within the budget. None if no plan exists.
    """
    max_vd, max_ed, max_ea = budget
    for total in range(max_vd + max_ed + max_ea + 1):
        for vd in range(min(total, max_vd) + 1):
            for ed in range(min(total - vd, max_ed) + 1):
                ea = total - vd - ed
                if ea > max_ea:
                    continue
                plan = _edit_exact(g, spec, vd, ed, ea)
                if plan is not None:
                    return plan
    return None


def _edit_exact(g, spec, vd, ed, ea):
    for dropped in itertools.combinations(range(g.n), vd):
        gone = set(dropped)
        alive = [v for v in range(g.n) if v not in gone]
        edges = [(u, v) for u, v in g.edges() if u not in gone and v not in gone]
        non_edges = [(u, v) for u, v in itertools.combinations(alive, 2) if not g.has_edge(u, v)]
        for de in itertools.combinations(edges, ed):
            for ad in itertools.combinations(non_edges, ea):
                plan = EditPlan(dropped, de, ad)
                if spec.contains(plan.apply(g)):
                    return plan
    return None


def min_edit_distance(g: Graph, spec: ClassSpec, k: int,
                      allow: tuple[bool, bool, bool] = (True, True, True)) -> EditPlan | None:
    """Scalar-budget wrapper: a plan of at most ``k`` edits of the allowed kinds."""
    return edit_distance(g, spec, tuple(k if a else 0 for a in allow))


def distance_independent_set(g: Graph, k: int, r: int) -> tuple[int, ...] | None:
    """``k`` vertices with pairwise distance at least ``r``, or None."""
    if k == 0:
        return ()
    adj = list(g.adj)
    dist = []
    for v in range(g.n):
        row = kernels.bfs_distances(adj, g.mask, v)
        dist.append([math.inf if d < 0 else d for d in row])
    chosen = []

    def extend(start):
        if len(chosen) == k:
            return True
        for v in range(start, g.n - (k - len(chosen)) + 1):
            if all(dist[u][v] >= r for u in chosen):
                chosen.append(v)
                if extend(v + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None
