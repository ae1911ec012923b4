"""Obstruction sets for disjoint-union closures, apex classes and the C_k tower.

``C_0`` is the class with the given excluded minors and ``C_{i+1}`` is the
disjoint-union closure of the apex graphs over ``C_i``; ``C_k`` is exactly
the class of graphs at elimination distance at most ``k``. Union closures are
computed exactly from connection closures. Apex obstructions are found by
bounded enumeration, so derived sets carry ``partial_up_to``.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from . import kernels
from .canon import canonical_form, connected_components, enumerate_graphs
from .errors import NotMinorClosedError
from .formats import graph_from_line, graph_to_line
from .graph import Graph
from .minors import ObstructionSet, excludes, minor_minimal_filter, one_step_minors


class Apex(enum.Enum):
    """Apex witness for the null graph, which has no vertex to remove."""

    VACUOUS = "vacuous"


@dataclass(frozen=True)
class CkSpec:
    base: ObstructionSet
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


def _prufer_trees(m: int):
    if m == 1:
        yield []
        return
    if m == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(m), repeat=m - 2):
        degree = [1] * m
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(m) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (i for i in range(m) if degree[i] == 1)
        edges.append((u, v))
        yield edges


def connection_closure(g: Graph) -> list[Graph]:
    """Minimal connected supergraphs of ``g`` on the same vertices that keep
    each component induced as it is.

    Every result adds one edge per edge of a spanning tree on the
    components, so has ``|E(g)| + #components - 1`` edges. Returned up to
    isomorphism, sorted by canonical code.
    """
    if g.n == 0:
        raise ValueError("the null graph has no connection closure")
    comps = [[v for v in range(g.n) if (c >> v) & 1]
             for c in kernels.components(list(g.adj), g.mask)]
    m = len(comps)
    if m == 1:
        return [g]
    expect = g.num_edges + m - 1
    found = {}
    for tree in _prufer_trees(m):
        choices = [[(u, v) for u in comps[a] for v in comps[b]] for a, b in tree]
        for picks in itertools.product(*choices):
            h = g
            for u, v in picks:
                h = h.add_edge(u, v)
            found.setdefault(canonical_form(h), h)
    out = [found[c] for c in sorted(found)]
    for h in out:
        assert h.is_connected() and h.num_edges == expect
    return out


def union_closure_obstructions(obstructions: Iterable[Graph],
                               budget: int | None = None) -> ObstructionSet:
    """Excluded minors of the disjoint-union closure of the class excluding ``obstructions``.

    These are the minor-minimal graphs among the connection closures of the
    members. Partiality of the input carries over unchanged.
    """
    members = list(obstructions)
    partial = getattr(obstructions, "partial_up_to", None)
    closures = {}
    for h in members:
        for c in connection_closure(h):
            closures.setdefault(canonical_form(c), c)
    result = minor_minimal_filter(closures.values(), budget)
    return ObstructionSet(result.members, partial)


def is_union_closed(obstructions: Iterable[Graph]) -> bool:
    """A minor-closed class is closed under disjoint unions iff all its obstructions are connected."""
    return all(h.is_connected() for h in obstructions)


def apex_membership(g: Graph, obstructions: Iterable[Graph],
                    budget: int | None = None) -> int | Apex | None:
    """A vertex whose removal leaves a graph excluding every obstruction.

    Returns ``Apex.VACUOUS`` for the null graph and None if no vertex works.
    """
    if g.n == 0:
        return Apex.VACUOUS
    obs = list(obstructions)
    for v in range(g.n):
        if excludes(g.delete_vertices([v]), obs, budget):
            return v
    return None


def ck_membership(g: Graph, spec: CkSpec, budget: int | None = None,
                  memo: dict | None = None) -> bool:
    """Membership in ``C_k`` by direct recursion on the apex/union definition."""
    memo = {} if memo is None else memo
    base = list(spec.base)

    def member(h: Graph, i: int) -> bool:
        key = (canonical_form(h), i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if i == 0:
            res = excludes(h, base, budget)
        else:
            res = all(
                any(member(comp.delete_vertices([v]), i - 1) for v in range(comp.n))
                for comp, _ in connected_components(h)
            )
        memo[key] = res
        return res

    return member(g, spec.k)


def enumerate_obstructions(membership: Callable[[Graph], bool], n_max: int) -> ObstructionSet:
    """All minor-minimal non-members with at most ``n_max`` vertices.

    Every graph up to ``n_max`` vertices is classified; a member with a
    non-member one-step minor raises :class:`NotMinorClosedError`. The result
    is flagged ``partial_up_to=n_max``.
    """
    member = {}
    graphs = []
    for n in range(n_max + 1):
        for g in enumerate_graphs(n):
            member[canonical_form(g)] = bool(membership(g))
            graphs.append(g)
    if not member[canonical_form(graphs[0])]:
        raise ValueError("membership must accept the null graph")
    found = []
    for g in graphs[1:]:
        inside = member[canonical_form(g)]
        for h in one_step_minors(g):
            if not member[canonical_form(h)]:
                if inside:
                    raise NotMinorClosedError(g, h)
                break
        else:
            if not inside:
                found.append(g)
    found.sort(key=canonical_form)
    return ObstructionSet(tuple(found), n_max)


def ck_obstructions(spec: CkSpec, n_max: int, budget: int | None = None) -> ObstructionSet:
    """Excluded minors of ``C_k``, complete for graphs of at most ``n_max`` vertices.

    Each level enumerates the apex obstructions of the previous level and
    takes their union closure exactly.
    """
    current = spec.base
    for _ in range(spec.k):
        prev = list(current)
        apex_obs = enumerate_obstructions(
            lambda g: apex_membership(g, prev, budget) is not None, n_max)
        current = union_closure_obstructions(apex_obs, budget)
    return current


def write_obstruction_file(path, obstructions: ObstructionSet, **meta) -> Path:
    """Write one graph6 line per member and a ``<path>.json`` sidecar; returns the sidecar path."""
    path = Path(path)
    path.write_text("".join(graph_to_line(g) + "\n" for g in obstructions))
    side = {"partial_up_to": obstructions.partial_up_to}
    side.update(meta)
    sidecar = path.with_name(path.name + ".json")
    sidecar.write_text(json.dumps(side, sort_keys=True) + "\n")
    return sidecar


def read_obstruction_file(path, validate: bool = True, budget: int | None = None) -> ObstructionSet:
    path = Path(path)
    graphs = [graph_from_line(line) for line in path.read_text().splitlines() if line.strip()]
    sidecar = path.with_name(path.name + ".json")
    partial = None
    if sidecar.exists():
        partial = json.loads(sidecar.read_text()).get("partial_up_to")
    if validate:
        return ObstructionSet.of(graphs, partial, budget)
    return ObstructionSet(tuple(graphs), partial)
