"""Canonical forms, isomorphism, components and small-graph enumeration."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from . import kernels
from .graph import Graph, null_graph

NULL_CODE = b"\x00\x00"


@lru_cache(maxsize=1 << 17)
def _labeling(adj: tuple[int, ...], colours: tuple[int | None, ...] | None):
    n = len(adj)
    cols = [-1] * n if colours is None else [-1 if c is None else c for c in colours]
    order, code = kernels.canonical_labeling(list(adj), cols)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    ordered = bytes(cols[v] + 1 for v in order)
    return order, n.to_bytes(2, "big") + ordered + code.to_bytes(nbytes, "big")


def canonical_form(g: Graph) -> bytes:
    """Byte string that is equal for two graphs iff they are isomorphic.

    Colours are respected: an isomorphism must map each vertex to one of the
    same colour (uncoloured vertices only to uncoloured ones).
    """
    if g.n == 0:
        return NULL_CODE
    return _labeling(g.adj, g.colours)[1]


def canonical_order(g: Graph) -> tuple[int, ...]:
    return _labeling(g.adj, g.colours)[0] if g.n else ()


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g``; isomorphic graphs give equal results."""
    return g.permuted(canonical_order(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components as ``(subgraph, vertex map into g)`` pairs.

    Ordered by canonical code, ties broken by smallest original vertex.
    """
    parts = []
    for comp in kernels.components(list(g.adj), g.mask):
        sub, vmap = g.subgraph_mask(comp)
        parts.append((canonical_form(sub), vmap[0], sub, vmap))
    parts.sort(key=lambda t: (t[0], t[1]))
    return [(sub, vmap) for _, _, sub, vmap in parts]


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (null_graph(),)
    found = {}
    for base in _graphs_on(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.adj) + [nbrs]
            for u in range(n - 1):
                if (nbrs >> u) & 1:
                    rows[u] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            code = canonical_form(g)
            if code not in found:
                found[code] = g
    return tuple(canonical_graph(found[c]) for c in sorted(found))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on ``n`` vertices.

    Representatives come out sorted by canonical code. Built by vertex
    augmentation of the (n-1)-vertex classes; results are cached per ``n``.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    for g in _graphs_on(n):
        if not connected_only or g.is_connected():
            yield g


def graphs_up_to(n_max: int, connected_only: bool = False) -> Iterator[Graph]:
    """All isomorphism classes with ``0..n_max`` vertices, smallest first."""
    for n in range(n_max + 1):
        yield from enumerate_graphs(n, connected_only)
