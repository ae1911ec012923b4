"""Evaluation of formulas on (coloured) graphs.

A formula is compiled once per graph into nested closures over a list of
variable slots, then run; every closure returns a real bool. Guarded Dist
atoms cache the allowed vertex set per valuation of the guard's free
variables, and BFS tables per (allowed set, source).
"""

from __future__ import annotations

from typing import Callable, Mapping

from .. import kernels
from ..errors import FormulaError
from ..graph import Graph
from .syntax import And, Colour, Dist, Edge, Eq, Exists, ForAll, Formula, Implies, Not, Or

Env = list
Compiled = Callable[[Env], bool]


class _Compiler:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = list(g.adj)
        self.slots: dict[str, int] = {}
        self.bfs_cache: dict = {}
        self.done: dict[int, Compiled] = {}

    def slot(self, name: str) -> int:
        return self.slots.setdefault(name, len(self.slots))

    def compile(self, f) -> Compiled:
        # built formulas share subtrees, so compile each node once
        hit = self.done.get(id(f))
        if hit is None:
            hit = self.done[id(f)] = self._compile(f)
        return hit

    def _compile(self, f) -> Compiled:
        t = type(f)
        adj = self.adj
        if t is Edge:
            i, j = self.slot(f.x), self.slot(f.y)
            return lambda e: (adj[e[i]] >> e[j]) & 1 == 1
        if t is Eq:
            i, j = self.slot(f.x), self.slot(f.y)
            return lambda e: e[i] == e[j]
        if t is Colour:
            if f.index >= self.g.num_colours:
                raise FormulaError(
                    f"colour index {f.index} out of range for {self.g.num_colours} colours"
                )
            i, idx, colours = self.slot(f.x), f.index, self.g.colours
            return lambda e: colours[e[i]] == idx
        if t is Not:
            a = self.compile(f.arg)
            return lambda e: not a(e)
        if t is And or t is Or:
            return self._junction(t is And, [self.compile(a) for a in f.args])
        if t is Implies:
            a, b = self.compile(f.left), self.compile(f.right)
            return lambda e: not a(e) or b(e)
        if t is Exists or t is ForAll:
            return self._quantifier(t is Exists, self.slot(f.var), self.compile(f.body))
        if t is Dist:
            return self._dist(f)
        raise FormulaError(f"not a formula: {f!r}")

    @staticmethod
    def _junction(conj: bool, parts: list[Compiled]) -> Compiled:
        if not parts:
            return (lambda e: True) if conj else (lambda e: False)
        if len(parts) == 1:
            return parts[0]
        if len(parts) == 2:
            a, b = parts
            if conj:
                return lambda e: a(e) and b(e)
            return lambda e: a(e) or b(e)
        parts = tuple(parts)
        if conj:
            def run(e):
                for p in parts:
                    if not p(e):
                        return False
                return True
        else:
            def run(e):
                for p in parts:
                    if p(e):
                        return True
                return False
        return run

    def _quantifier(self, exists: bool, s: int, body: Compiled) -> Compiled:
        vertices = range(self.g.n)

        def run(e):
            old = e[s]
            for w in vertices:
                e[s] = w
                if body(e) is exists:
                    e[s] = old
                    return exists
            e[s] = old
            return not exists

        return run

    def _dist(self, f: Dist) -> Compiled:
        i, j, bound = self.slot(f.x), self.slot(f.y), f.bound
        adj, bfs_cache = self.adj, self.bfs_cache
        if f.guard is None:
            full = self.g.mask

            def allowed(e):
                return full
        else:
            allowed = self._guard(f.guard)

        def run(e):
            mask = allowed(e)
            a, b = e[i], e[j]
            if not (mask >> a) & 1 or not (mask >> b) & 1:
                return False
            key = (mask, a)
            dist = bfs_cache.get(key)
            if dist is None:
                dist = kernels.bfs_distances(adj, mask, a)
                bfs_cache[key] = dist
            return 0 <= dist[b] <= bound

        return run

    def _guard(self, guard) -> Callable[[Env], int]:
        gs = self.slot(guard.var)
        body = self.compile(guard.formula)
        keys = tuple(self.slot(v) for v in sorted(guard.formula.fv - {guard.var}))
        cache: dict = {}
        vertices = range(self.g.n)

        def allowed(e):
            key = tuple(e[k] for k in keys)
            mask = cache.get(key)
            if mask is None:
                old = e[gs]
                mask = 0
                for w in vertices:
                    e[gs] = w
                    if body(e):
                        mask |= 1 << w
                e[gs] = old
                cache[key] = mask
            return mask

        return allowed


def evaluate(phi: Formula, g: Graph, env: Mapping[str, int] | None = None) -> bool:
    """Truth value of ``phi`` in ``g`` under the assignment ``env``."""
    env = dict(env or {})
    missing = phi.fv - env.keys()
    if missing:
        raise FormulaError(f"unbound variables: {', '.join(sorted(missing))}")
    for v, w in env.items():
        if not 0 <= w < g.n:
            raise FormulaError(f"variable {v} assigned to non-vertex {w}")
    comp = _Compiler(g)
    run = comp.compile(phi)
    slots = [-1] * len(comp.slots)
    for v, w in env.items():
        if v in comp.slots:
            slots[comp.slots[v]] = w
    return bool(run(slots))
