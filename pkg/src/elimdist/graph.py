"""Finite simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex. Graphs are immutable;
every editing method returns a new graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernels


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    colours: tuple[int | None, ...] | None = None
    num_colours: int = 0

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency rows must match the vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} adjacent to a non-vertex")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                r ^= low
        if self.colours is not None:
            if len(self.colours) != self.n:
                raise ValueError("colour list must have one entry per vertex")
            for v, c in enumerate(self.colours):
                if c is not None and not 0 <= c < self.num_colours:
                    raise ValueError(
                        f"colour {c} of vertex {v} outside 0..{self.num_colours - 1}"
                    )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        colours=None,
        num_colours: int | None = None,
    ) -> Graph:
        """Build a graph from an edge iterable.

        ``colours`` may be a per-vertex sequence (None for uncoloured) or a
        partial ``{vertex: colour}`` mapping.
        """
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        cols = _normalise_colours(n, colours)
        if num_colours is None:
            num_colours = 1 + max((c for c in cols or () if c is not None), default=-1)
        return cls(n, tuple(rows), cols, num_colours)

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(kernels.popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (self.adj[u] >> v) & 1
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return kernels.popcount(self.adj[v])

    def neighbours(self, v: int) -> list[int]:
        return [u for u in range(self.n) if (self.adj[v] >> u) & 1]

    def colour(self, v: int) -> int | None:
        return None if self.colours is None else self.colours[v]

    def is_connected(self) -> bool:
        return self.n == 0 or len(kernels.components(list(self.adj), self.mask)) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph induced by ``vertices`` plus the map new index -> old index."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            r = self.adj[v]
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if u in index:
                    row |= 1 << index[u]
                r ^= low
            rows.append(row)
        cols = None if self.colours is None else tuple(self.colours[v] for v in keep)
        return Graph(len(keep), tuple(rows), cols, self.num_colours), keep

    def delete_vertices(self, removed: Iterable[int]) -> Graph:
        gone = set(removed)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)[0]

    def subgraph_mask(self, mask: int) -> tuple[Graph, tuple[int, ...]]:
        return self.induced_subgraph(v for v in range(self.n) if (mask >> v) & 1)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("self-loops are not allowed")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows), self.colours, self.num_colours)

    def delete_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows), self.colours, self.num_colours)

    def contract_edge(self, u: int, v: int) -> Graph:
        """Merge ``v`` into ``u``; the merged vertex keeps ``u``'s colour."""
        if not self.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge")
        rows = list(self.adj)
        merged = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
        rows[u] = merged
        for w in range(self.n):
            if (merged >> w) & 1:
                rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
        rows[v] = 0
        tmp = Graph(self.n, tuple(rows), self.colours, self.num_colours)
        return tmp.delete_vertices([v])

    def permuted(self, order: Sequence[int]) -> Graph:
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        rows = [0] * self.n
        for u, v in self.edges():
            rows[pos[u]] |= 1 << pos[v]
            rows[pos[v]] |= 1 << pos[u]
        cols = None if self.colours is None else tuple(self.colours[o] for o in order)
        return Graph(self.n, tuple(rows), cols, self.num_colours)

    def __repr__(self):
        extra = "" if self.colours is None else f", colours={list(self.colours)}"
        return f"Graph(n={self.n}, edges={self.edges()}{extra})"


def _normalise_colours(n, colours):
    if colours is None:
        return None
    if isinstance(colours, dict):
        cols = [None] * n
        for v, c in colours.items():
            cols[int(v)] = None if c is None else int(c)
        return tuple(cols)
    cols = tuple(None if c is None else int(c) for c in colours)
    if len(cols) != n:
        raise ValueError("colour list must have one entry per vertex")
    return cols


def disjoint_union(*graphs: Graph) -> Graph:
    rows = []
    cols = []
    coloured = any(g.colours is not None for g in graphs)
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.adj)
        cols.extend(g.colours if g.colours is not None else [None] * g.n)
        offset += g.n
    num = max((g.num_colours for g in graphs), default=0)
    return Graph(offset, tuple(rows), tuple(cols) if coloured else None, num)


def null_graph() -> Graph:
    return Graph(0, ())


def empty_graph(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def bfs_distance(
    g: Graph,
    u: int,
    v: int,
    allowed: Callable[[int], bool] | Iterable[int] | None = None,
) -> float:
    """Length of a shortest ``u``-``v`` path using only allowed vertices.

    Returns ``math.inf`` when no such path exists (including when an endpoint
    is itself not allowed).
    """
    for w in (u, v):
        if not 0 <= w < g.n:
            raise IndexError(f"vertex {w} not in graph with {g.n} vertices")
    if allowed is None:
        amask = g.mask
    elif callable(allowed):
        amask = sum(1 << w for w in range(g.n) if allowed(w))
    else:
        amask = sum(1 << w for w in set(allowed))
    d = kernels.bfs_distances(list(g.adj), amask, u)[v]
    return math.inf if d < 0 else d
