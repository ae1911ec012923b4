"""Exact minor and depth-r minor containment with branch-set witnesses.

The search assigns pattern vertices, highest degree first, to pairwise
disjoint connected vertex sets of the host graph, checking that every
pattern edge is realised by an edge between the two sets. For depth-r minors
only sets with a centre reaching all members within ``r`` steps inside the
set are admissible. Every search has a node budget; running out raises
:class:`BudgetExhausted`, never a negative answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import kernels
from .canon import canonical_form
from .errors import InvalidObstructionSet
from .graph import Graph, complete_graph

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    env = os.environ.get("ELIMDIST_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class MinorMap:
    """Witness for H being a minor of G.

    ``branch_sets[h]`` is the set of G-vertices the H-vertex ``h`` maps to.
    For depth-bounded maps ``centers[h]`` is a vertex of that set reaching the
    rest of it within ``radius`` steps inside the set.
    """

    branch_sets: tuple[frozenset[int], ...]
    centers: tuple[int, ...] | None = None
    radius: int | None = None

    def to_json(self) -> dict:
        out = {"branch_sets": {str(h): sorted(s) for h, s in enumerate(self.branch_sets)}}
        if self.radius is not None:
            out["radius"] = self.radius
        if self.centers is not None:
            out["centers"] = {str(h): c for h, c in enumerate(self.centers)}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> MinorMap:
        sets = obj["branch_sets"]
        sets = tuple(frozenset(sets[str(h)]) for h in range(len(sets)))
        centers = obj.get("centers")
        if centers is not None:
            centers = tuple(centers[str(h)] for h in range(len(centers)))
        return cls(sets, centers, obj.get("radius"))

    def violations(self, h: Graph, g: Graph) -> list[str]:
        """Every broken invariant of this map as a witness for ``h`` in ``g``."""
        problems = []
        if len(self.branch_sets) != h.n:
            return [f"{len(self.branch_sets)} branch sets for {h.n} pattern vertices"]
        seen = set()
        for x, bs in enumerate(self.branch_sets):
            if not bs:
                problems.append(f"branch set of {x} is empty")
                continue
            if any(not 0 <= v < g.n for v in bs):
                problems.append(f"branch set of {x} leaves the host graph")
                continue
            if seen & bs:
                problems.append(f"branch set of {x} overlaps an earlier one")
            seen |= bs
            mask = sum(1 << v for v in bs)
            if len(kernels.components(list(g.adj), mask)) != 1:
                problems.append(f"branch set of {x} is disconnected")
            if self.radius is not None:
                c = None if self.centers is None else self.centers[x]
                if c not in bs:
                    problems.append(f"centre of {x} is outside its branch set")
                else:
                    dist = kernels.bfs_distances(list(g.adj), mask, c)
                    if any(dist[v] < 0 or dist[v] > self.radius for v in bs):
                        problems.append(f"branch set of {x} exceeds radius {self.radius}")
        if problems:
            return problems
        for a, b in h.edges():
            if not any(g.adj[u] & sum(1 << v for v in self.branch_sets[b])
                       for u in self.branch_sets[a]):
                problems.append(f"edge {a}-{b} not realised")
        return problems

    def is_valid(self, h: Graph, g: Graph) -> bool:
        return not self.violations(h, g)


@lru_cache(maxsize=4096)
def _admissible(adj: tuple[int, ...], radius: int):
    subsets = kernels.connected_subsets(list(adj), radius)
    masks = [s[0] for s in subsets]
    nbrs = [s[1] for s in subsets]
    centres = {s[0]: s[2] for s in subsets}
    return masks, nbrs, centres


def _search(h: Graph, g: Graph, radius: int | None, budget: int | None) -> MinorMap | None:
    if budget is None:
        budget = default_budget()
    if h.n == 0:
        return MinorMap((), () if radius is not None else None, radius)
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    # a connected set of k vertices always has radius <= k - 1
    eff = -1 if radius is None or radius >= g.n - 1 else radius
    masks, nbrs, centres = _admissible(g.adj, eff)
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    found = kernels.minor_search(list(h.adj), order, masks, nbrs, g.mask, budget)
    if found is None:
        return None
    sets = tuple(frozenset(v for v in range(g.n) if (m >> v) & 1) for m in found)
    if radius is None:
        return MinorMap(sets)
    return MinorMap(sets, tuple(centres[m] if eff >= 0 else _centre(g, m) for m in found), radius)


def _centre(g: Graph, mask: int) -> int:
    best, best_ecc = -1, g.n + 1
    for v in range(g.n):
        if (mask >> v) & 1:
            dist = kernels.bfs_distances(list(g.adj), mask, v)
            ecc = max(dist[u] for u in range(g.n) if (mask >> u) & 1)
            if ecc < best_ecc:
                best, best_ecc = v, ecc
    return best


def is_minor(h: Graph, g: Graph, budget: int | None = None) -> MinorMap | None:
    """A minor map witnessing ``h`` as a minor of ``g``, or None."""
    return _search(h, g, None, budget)


def is_depth_minor(h: Graph, g: Graph, r: int, budget: int | None = None) -> MinorMap | None:
    """A minor map whose branch sets all have radius at most ``r``, or None."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    return _search(h, g, r, budget)


@dataclass(frozen=True)
class ObstructionSet:
    """A finite antichain of pairwise non-isomorphic nonempty graphs.

    ``partial_up_to`` is set when the set was produced by bounded enumeration
    and is only known to be complete up to that many vertices.
    """

    members: tuple[Graph, ...]
    partial_up_to: int | None = None

    @classmethod
    def of(cls, graphs: Iterable[Graph], partial_up_to: int | None = None,
           budget: int | None = None) -> ObstructionSet:
        obs = cls(tuple(graphs), partial_up_to)
        obs.validate(budget)
        return obs

    def validate(self, budget: int | None = None) -> None:
        codes = set()
        for g in self.members:
            if g.n == 0:
                raise InvalidObstructionSet("the null graph cannot be an obstruction")
            c = canonical_form(g)
            if c in codes:
                raise InvalidObstructionSet("obstruction set has isomorphic members")
            codes.add(c)
        for a in self.members:
            for b in self.members:
                if a is not b and is_minor(a, b, budget) is not None:
                    raise InvalidObstructionSet("obstruction set is not an antichain")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def codes(self) -> frozenset[bytes]:
        return frozenset(canonical_form(g) for g in self.members)

    def same_classes(self, other: Iterable[Graph]) -> bool:
        """True iff both sets contain the same graphs up to isomorphism."""
        return self.codes() == frozenset(canonical_form(g) for g in other)


def excludes(g: Graph, obstructions: Iterable[Graph], budget: int | None = None) -> bool:
    """True iff no obstruction is a minor of ``g``."""
    return all(is_minor(h, g, budget) is None for h in obstructions)


def one_step_minors(g: Graph) -> list[Graph]:
    """Non-isomorphic results of one vertex deletion, edge deletion or contraction."""
    found = {}
    for v in range(g.n):
        h = g.delete_vertices([v])
        found.setdefault(canonical_form(h), h)
    for u, v in g.edges():
        for h in (g.delete_edge(u, v), g.contract_edge(u, v)):
            found.setdefault(canonical_form(h), h)
    return [found[c] for c in sorted(found)]


def minor_minimal_filter(graphs: Iterable[Graph], budget: int | None = None) -> ObstructionSet:
    """Deduplicate, then drop every graph having another kept graph as a minor."""
    unique = {}
    for g in graphs:
        unique.setdefault(canonical_form(g), g)
    # a proper minor has fewer vertices or fewer edges, so smaller graphs go first
    ordered = sorted(unique.items(), key=lambda kv: (kv[1].n, kv[1].num_edges, kv[0]))
    kept = []
    for _, g in ordered:
        if all(is_minor(h, g, budget) is None for h in kept):
            kept.append(g)
    kept.sort(key=canonical_form)
    return ObstructionSet(tuple(kept))


def max_clique_depth_minor(g: Graph, r: int, cap: int, budget: int | None = None) -> int:
    """Largest ``m <= cap`` with K_m a depth-``r`` minor of ``g``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    best = 0
    for m in range(1, min(cap, g.n) + 1):
        if is_depth_minor(complete_graph(m), g, r, budget) is None:
            break
        best = m
    return best
