"""S-expression text format for formulas.

::

    (E x y)  (= x y)  (C 2 x)  (dist u v 4)  (dist u v 4 :guard (x (not (= x w))))
    (not f)  (and f ...)  (or f ...)  (implies f g)  (exists v f)  (forall v f)

``true`` and ``false`` are accepted as ``(and)`` and ``(or)``.
"""

from __future__ import annotations

import re

from ..errors import FormulaError
from .syntax import (And, Colour, Dist, Edge, Eq, Exists, ForAll, Formula, Guard,
                     Implies, Not, Or)

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_KEYWORDS = {"E", "=", "C", "dist", "not", "and", "or", "implies", "exists", "forall"}


def _tokenise(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip():
                raise FormulaError(f"unexpected character at offset {pos}")
            break
        pos = m.end()
        out.append(m.group(1) or m.group(2) or m.group(3))
    return out


def _read(tokens, i):
    if i >= len(tokens):
        raise FormulaError("unexpected end of formula")
    tok = tokens[i]
    if tok == ")":
        raise FormulaError("unexpected ')'")
    if tok != "(":
        return tok, i + 1
    items = []
    i += 1
    while True:
        if i >= len(tokens):
            raise FormulaError("missing ')'")
        if tokens[i] == ")":
            return items, i + 1
        item, i = _read(tokens, i)
        items.append(item)


def _var(x):
    if not isinstance(x, str) or x in _KEYWORDS or x.startswith(":"):
        raise FormulaError(f"expected a variable, got {x!r}")
    return x


def _nat(x):
    if not isinstance(x, str) or not x.isdigit():
        raise FormulaError(f"expected a natural number, got {x!r}")
    return int(x)


def _build(tree) -> Formula:
    if isinstance(tree, str):
        if tree == "true":
            return And(())
        if tree == "false":
            return Or(())
        raise FormulaError(f"bare symbol {tree!r} is not a formula")
    if not tree:
        raise FormulaError("empty list is not a formula")
    head, args = tree[0], tree[1:]

    def arity(k):
        if len(args) != k:
            raise FormulaError(f"{head} takes {k} arguments, got {len(args)}")

    if head == "E":
        arity(2)
        return Edge(_var(args[0]), _var(args[1]))
    if head == "=":
        arity(2)
        return Eq(_var(args[0]), _var(args[1]))
    if head == "C":
        arity(2)
        return Colour(_nat(args[0]), _var(args[1]))
    if head == "dist":
        if len(args) == 3:
            return Dist(_var(args[0]), _var(args[1]), _nat(args[2]))
        if len(args) == 5 and args[3] == ":guard":
            g = args[4]
            if not isinstance(g, list) or len(g) != 2:
                raise FormulaError("guard must be (var formula)")
            return Dist(_var(args[0]), _var(args[1]), _nat(args[2]), Guard(_var(g[0]), _build(g[1])))
        raise FormulaError("dist takes u v d [:guard (x f)]")
    if head == "not":
        arity(1)
        return Not(_build(args[0]))
    if head == "and":
        return And(tuple(_build(a) for a in args))
    if head == "or":
        return Or(tuple(_build(a) for a in args))
    if head == "implies":
        arity(2)
        return Implies(_build(args[0]), _build(args[1]))
    if head in ("exists", "forall"):
        arity(2)
        cls = Exists if head == "exists" else ForAll
        return cls(_var(args[0]), _build(args[1]))
    raise FormulaError(f"unknown operator {head!r}")


def parse_formula(text: str) -> Formula:
    tokens = _tokenise(text)
    tree, end = _read(tokens, 0)
    if end != len(tokens):
        raise FormulaError("trailing input after formula")
    return _build(tree)


def format_formula(f: Formula) -> str:
    if isinstance(f, Edge):
        return f"(E {f.x} {f.y})"
    if isinstance(f, Eq):
        return f"(= {f.x} {f.y})"
    if isinstance(f, Colour):
        return f"(C {f.index} {f.x})"
    if isinstance(f, Dist):
        if f.guard is None:
            return f"(dist {f.x} {f.y} {f.bound})"
        return f"(dist {f.x} {f.y} {f.bound} :guard ({f.guard.var} {format_formula(f.guard.formula)}))"
    if isinstance(f, Not):
        return f"(not {format_formula(f.arg)})"
    if isinstance(f, (And, Or)):
        op = "and" if isinstance(f, And) else "or"
        return "(" + " ".join([op] + [format_formula(a) for a in f.args]) + ")"
    if isinstance(f, Implies):
        return f"(implies {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Exists):
        return f"(exists {f.var} {format_formula(f.body)})"
    if isinstance(f, ForAll):
        return f"(forall {f.var} {format_formula(f.body)})"
    raise FormulaError(f"not a formula: {f!r}")
