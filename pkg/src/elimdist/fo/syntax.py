"""First-order formula AST over graphs, with guarded distance atoms.

Variables are plain strings. Every node carries its free-variable set
``fv``, computed once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import FormulaError


def _fv(obj, names):
    object.__setattr__(obj, "fv", frozenset(names))


@dataclass(frozen=True)
class Edge:
    x: str
    y: str
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, (self.x, self.y))


@dataclass(frozen=True)
class Eq:
    x: str
    y: str
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, (self.x, self.y))


@dataclass(frozen=True)
class Colour:
    index: int
    x: str
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.index < 0:
            raise FormulaError("colour index must be non-negative")
        _fv(self, (self.x,))


@dataclass(frozen=True)
class Guard:
    """Unary formula ``formula(var)`` restricting the vertices a path may use."""

    var: str
    formula: "Formula"


@dataclass(frozen=True)
class Dist:
    """``x`` and ``y`` are joined by a path of length at most ``bound``.

    With a guard, both endpoints and every vertex on the path must satisfy it.
    """

    x: str
    y: str
    bound: int
    guard: Guard | None = None
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.bound < 0:
            raise FormulaError("distance bound must be non-negative")
        names = {self.x, self.y}
        if self.guard is not None:
            names |= self.guard.formula.fv - {self.guard.var}
        _fv(self, names)


@dataclass(frozen=True)
class Not:
    arg: "Formula"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, self.arg.fv)


@dataclass(frozen=True)
class And:
    args: tuple
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        _fv(self, frozenset().union(*(a.fv for a in self.args)))


@dataclass(frozen=True)
class Or:
    args: tuple
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        _fv(self, frozenset().union(*(a.fv for a in self.args)))


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, self.left.fv | self.right.fv)


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, self.body.fv - {self.var})


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"
    fv: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _fv(self, self.body.fv - {self.var})


Formula = Union[Edge, Eq, Colour, Dist, Not, And, Or, Implies, Exists, ForAll]

TRUE = And(())
FALSE = Or(())


def neq(x: str, y: str) -> Not:
    return Not(Eq(x, y))


def conj(*parts: Formula) -> Formula:
    return parts[0] if len(parts) == 1 else And(parts)


def exists_all(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = Exists(v, body)
    return body


def forall_all(names, body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = ForAll(v, body)
    return body


def is_sentence(f: Formula) -> bool:
    return not f.fv


def all_vars(f: Formula) -> set[str]:
    """Every variable name occurring in ``f``, free or bound."""
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (Edge, Eq)):
            out.update((g.x, g.y))
        elif isinstance(g, Colour):
            out.add(g.x)
        elif isinstance(g, Dist):
            out.update((g.x, g.y))
            if g.guard is not None:
                out.add(g.guard.var)
                stack.append(g.guard.formula)
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.extend(g.args)
        elif isinstance(g, Implies):
            stack.extend((g.left, g.right))
        elif isinstance(g, (Exists, ForAll)):
            out.add(g.var)
            stack.append(g.body)
        else:
            raise FormulaError(f"not a formula: {g!r}")
    return out


def fresh(avoid: set[str], base: str = "v") -> str:
    """Smallest ``base<i>`` not in ``avoid``; the name is added to ``avoid``."""
    i = 0
    while f"{base}{i}" in avoid:
        i += 1
    name = f"{base}{i}"
    avoid.add(name)
    return name


def substitute(f: Formula, var: str, new: str) -> Formula:
    """Replace free occurrences of ``var`` by ``new``, renaming binders that would capture it."""
    if var == new or var not in f.fv:
        return f
    if isinstance(f, Edge):
        return Edge(new if f.x == var else f.x, new if f.y == var else f.y)
    if isinstance(f, Eq):
        return Eq(new if f.x == var else f.x, new if f.y == var else f.y)
    if isinstance(f, Colour):
        return Colour(f.index, new)
    if isinstance(f, Dist):
        x = new if f.x == var else f.x
        y = new if f.y == var else f.y
        guard = f.guard
        if guard is not None and guard.var != var and var in guard.formula.fv:
            gv, body = guard.var, guard.formula
            if gv == new:
                gv = fresh(all_vars(body) | {var, new}, "g")
                body = substitute(body, guard.var, gv)
            guard = Guard(gv, substitute(body, var, new))
        return Dist(x, y, f.bound, guard)
    if isinstance(f, Not):
        return Not(substitute(f.arg, var, new))
    if isinstance(f, And):
        return And(tuple(substitute(a, var, new) for a in f.args))
    if isinstance(f, Or):
        return Or(tuple(substitute(a, var, new) for a in f.args))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, var, new), substitute(f.right, var, new))
    if isinstance(f, (Exists, ForAll)):
        v, body = f.var, f.body
        if v == new:
            v = fresh(all_vars(body) | {var, new})
            body = substitute(body, f.var, v)
        return type(f)(v, substitute(body, var, new))
    raise FormulaError(f"not a formula: {f!r}")
