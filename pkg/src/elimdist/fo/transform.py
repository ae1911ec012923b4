"""Syntactic transformations: relativisation, distance-atom expansion, rank."""

from __future__ import annotations

from ..errors import FormulaError
from .syntax import (And, Colour, Dist, Edge, Eq, Exists, ForAll, Formula, Guard,
                     Implies, Not, Or, all_vars, fresh, substitute)


def quantifier_rank(f: Formula) -> int:
    """Nesting depth of quantifiers; distance atoms count as quantifier-free."""
    if isinstance(f, (Edge, Eq, Colour, Dist)):
        return 0
    if isinstance(f, Not):
        return quantifier_rank(f.arg)
    if isinstance(f, (And, Or)):
        return max((quantifier_rank(a) for a in f.args), default=0)
    if isinstance(f, Implies):
        return max(quantifier_rank(f.left), quantifier_rank(f.right))
    if isinstance(f, (Exists, ForAll)):
        return 1 + quantifier_rank(f.body)
    raise FormulaError(f"not a formula: {f!r}")


def relativise(phi: Formula, psi: Formula, x: str) -> Formula:
    """Restrict every quantifier (and distance path) of ``phi`` to vertices satisfying ``psi(x)``.

    ``∃v φ'`` becomes ``∃v (ψ[v/x] ∧ φ')`` and ``∀v φ'`` becomes
    ``∀v (ψ[v/x] → φ')``. Distance atoms get ``ψ`` conjoined to their guard.
    Variables free in ``psi`` other than ``x`` stay free; binders of ``phi``
    that would capture them are renamed.
    """
    if x not in psi.fv:
        raise FormulaError(f"variable {x} is not free in the relativising formula")
    return _relativise(phi, psi, x)


def _relativise(phi, psi, x):
    others = psi.fv - {x}
    avoid = all_vars(phi) | all_vars(psi)

    def at(v):
        return substitute(psi, x, v)

    def rel(f):
        if isinstance(f, (Edge, Eq, Colour)):
            return f
        if isinstance(f, Not):
            return Not(rel(f.arg))
        if isinstance(f, And):
            return And(tuple(rel(a) for a in f.args))
        if isinstance(f, Or):
            return Or(tuple(rel(a) for a in f.args))
        if isinstance(f, Implies):
            return Implies(rel(f.left), rel(f.right))
        if isinstance(f, (Exists, ForAll)):
            v, body = f.var, f.body
            if v in others:
                v = fresh(avoid)
                body = substitute(body, f.var, v)
            if isinstance(f, Exists):
                return Exists(v, And((at(v), rel(body))))
            return ForAll(v, Implies(at(v), rel(body)))
        if isinstance(f, Dist):
            if f.guard is None:
                return Dist(f.x, f.y, f.bound, Guard(x, psi))
            gv, body = f.guard.var, f.guard.formula
            if gv in others:
                gv = fresh(avoid, "g")
                body = substitute(body, f.guard.var, gv)
            return Dist(f.x, f.y, f.bound, Guard(gv, And((rel(body), at(gv)))))
        raise FormulaError(f"not a formula: {f!r}")

    return rel(phi)


def distance_formula(u: str, v: str, d: int, avoid: set[str]) -> Formula:
    """Pure first-order ``dist_d(u, v)`` by repeated doubling.

    ``dist_0 = (u = v)``, ``dist_1 = (u = v ∨ E(u,v))``,
    ``dist_2d = ∃z (dist_d(u,z) ∧ dist_d(z,v))`` and
    ``dist_2d+1 = ∃z (dist_2d(u,z) ∧ dist_1(z,v))``.
    Fresh variable names are drawn from (and added to) ``avoid``.
    """
    if d == 0:
        return Eq(u, v)
    if d == 1:
        return Or((Eq(u, v), Edge(u, v)))
    avoid.update((u, v))
    z = fresh(avoid, "z")
    if d % 2 == 0:
        left, right = distance_formula(u, z, d // 2, avoid), distance_formula(z, v, d // 2, avoid)
    else:
        left, right = distance_formula(u, z, d - 1, avoid), distance_formula(z, v, 1, avoid)
    return Exists(z, And((left, right)))


def expand_distance_atoms(phi: Formula) -> Formula:
    """Equivalent formula without distance atoms.

    A guarded atom ``Dist(u, v, d, (y, χ))`` becomes
    ``χ[u/y] ∧ χ[v/y] ∧ dist_d(u, v)^{[y.χ]}``.
    """
    avoid = all_vars(phi)

    def exp(f):
        if isinstance(f, (Edge, Eq, Colour)):
            return f
        if isinstance(f, Not):
            return Not(exp(f.arg))
        if isinstance(f, And):
            return And(tuple(exp(a) for a in f.args))
        if isinstance(f, Or):
            return Or(tuple(exp(a) for a in f.args))
        if isinstance(f, Implies):
            return Implies(exp(f.left), exp(f.right))
        if isinstance(f, (Exists, ForAll)):
            return type(f)(f.var, exp(f.body))
        if isinstance(f, Dist):
            path = distance_formula(f.x, f.y, f.bound, avoid)
            if f.guard is None:
                return path
            y, chi = f.guard.var, exp(f.guard.formula)
            avoid.update(all_vars(chi))
            return And((substitute(chi, y, f.x), substitute(chi, y, f.y), _relativise(path, chi, y)))
        raise FormulaError(f"not a formula: {f!r}")

    return exp(phi)
