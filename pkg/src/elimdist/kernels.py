"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it was built and the graph
fits in a machine word; otherwise the pure-Python module is used. Setting
``ELIMDIST_PURE_PYTHON=1`` forces the fallback for the whole process.
"""

import os

from . import _purekernels as pure

try:
    if os.environ.get("ELIMDIST_PURE_PYTHON"):
        raise ImportError("pure Python backend requested")
    from . import _speedups as compiled
except ImportError:
    compiled = None

_impl = compiled if compiled is not None else pure
BACKEND = _impl.BACKEND

MAX_COMPILED_N = 64
MAX_SUBSET_N = 30


def _pick(n):
    return _impl if n <= MAX_COMPILED_N else pure


def popcount(x):
    return x.bit_count() if hasattr(x, "bit_count") else bin(x).count("1")


def components(adj, mask):
    return _pick(len(adj)).components(adj, mask)


def bfs_distances(adj, allowed, source):
    return _pick(len(adj)).bfs_distances(adj, allowed, source)


def connected_subsets(adj, radius):
    if len(adj) > MAX_SUBSET_N:
        raise ValueError(
            f"branch-set enumeration is limited to {MAX_SUBSET_N} vertices"
        )
    return _impl.connected_subsets(adj, radius)


def minor_search(hadj, order, cand_masks, cand_nbrs, gmask, budget):
    return _impl.minor_search(hadj, order, cand_masks, cand_nbrs, gmask, budget)


def canonical_labeling(adj, colours):
    return _pick(len(adj)).canonical_labeling(adj, colours)


def treedepth(adj, mask, limit, memo):
    return _pick(len(adj)).treedepth(adj, mask, limit, memo)
