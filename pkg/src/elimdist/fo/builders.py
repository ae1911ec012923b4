"""Sentences for tree-depth, vertex deletion and edge editing."""

from __future__ import annotations

from functools import lru_cache

from .syntax import (And, Dist, Edge, Eq, Exists, ForAll, Formula, Implies, Not, Or,
                     all_vars, exists_all, fresh, is_sentence, neq)
from .transform import expand_distance_atoms, relativise
from ..errors import FormulaError


def null_graph_sentence() -> Formula:
    """True exactly on the graph without vertices."""
    return Not(Exists("v", Eq("v", "v")))


def edgeless_sentence() -> Formula:
    return ForAll("u", ForAll("v", Not(Edge("u", "v"))))


def has_edge_sentence() -> Formula:
    return Exists("u", Exists("v", Edge("u", "v")))


def connected_bounded_sentence(d: int) -> Formula:
    """Every two vertices are within distance ``d``."""
    return ForAll("u", ForAll("v", Dist("u", "v", d)))


@lru_cache(maxsize=None)
def treedepth_formula(k: int) -> Formula:
    """Sentence true exactly on graphs of tree-depth at most ``k``.

    Connectivity is replaced by a diameter bound: a graph of tree-depth at
    most ``j + 1`` has no two vertices at finite distance above ``2^(j+1)``,
    so the ball of that radius around a vertex is its component.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    phi = null_graph_sentence()
    for j in range(k):
        d = 2 ** (j + 1)
        theta = And((
            ForAll("u", ForAll("v", Dist("u", "v", d))),
            Exists("w", relativise(phi, neq("x", "w"), "x")),
        ))
        phi = And((
            ForAll("u", ForAll("v", Implies(Dist("u", "v", d + 1), Dist("u", "v", d)))),
            ForAll("w", relativise(theta, Dist("w", "x", d), "x")),
        ))
    return phi


def deletion_formula(phi: Formula, k: int) -> Formula:
    """Sentence true iff deleting at most ``k`` vertices can make ``phi`` true.

    The deleted vertices ``w_i`` may coincide, so this expresses "at most k".
    ``phi`` itself is added as a disjunct so that zero deletions are possible
    on the null graph too.
    """
    if not is_sentence(phi):
        raise FormulaError("deletion_formula needs a sentence")
    if k == 0:
        return phi
    avoid = all_vars(phi) | {"x"}
    ws = [fresh(avoid, "w") for _ in range(k)]
    keep = And(tuple(neq("x", w) for w in ws))
    return Or((phi, exists_all(ws, relativise(phi, keep, "x"))))


def _rewrite_edges(f: Formula, make) -> Formula:
    if isinstance(f, Edge):
        return make(f.x, f.y)
    if isinstance(f, Not):
        return Not(_rewrite_edges(f.arg, make))
    if isinstance(f, And):
        return And(tuple(_rewrite_edges(a, make) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(_rewrite_edges(a, make) for a in f.args))
    if isinstance(f, Implies):
        return Implies(_rewrite_edges(f.left, make), _rewrite_edges(f.right, make))
    if isinstance(f, (Exists, ForAll)):
        return type(f)(f.var, _rewrite_edges(f.body, make))
    return f


def edge_edit_formula(phi: Formula, additions: int, deletions: int) -> Formula:
    """Sentence true iff at most ``additions`` edge additions and ``deletions``
    edge deletions can make ``phi`` true.

    Each edit gets a fresh existentially quantified vertex pair and rewrites
    every edge atom. A pair with equal endpoints (or an already present edge
    for additions, a non-edge for deletions) is a no-op, which gives the
    "at most" reading.
    """
    if not is_sentence(phi):
        raise FormulaError("edge_edit_formula needs a sentence")
    if additions == 0 and deletions == 0:
        return phi
    body = expand_distance_atoms(phi)
    avoid = all_vars(body)
    pairs = []
    for _ in range(deletions):
        u, v = fresh(avoid, "d"), fresh(avoid, "d")
        pairs += [u, v]

        def drop(w1, w2, u=u, v=v):
            return And((Or((neq(w1, u), neq(w2, v))), Or((neq(w1, v), neq(w2, u))), Edge(w1, w2)))

        body = _rewrite_edges(body, drop)
    for _ in range(additions):
        u, v = fresh(avoid, "a"), fresh(avoid, "a")
        pairs += [u, v]

        def add(w1, w2, u=u, v=v):
            new = Or((And((Eq(w1, u), Eq(w2, v))), And((Eq(w1, v), Eq(w2, u)))))
            return Or((And((neq(u, v), new)), Edge(w1, w2)))

        body = _rewrite_edges(body, add)
    return Or((phi, exists_all(pairs, body)))
