"""Pure-Python versions of the hot kernels.

Every function here has a typed twin in ``_speedups.pyx``; both operate on
graphs given as a list of adjacency bitmasks (bit ``j`` of ``adj[i]`` set iff
``ij`` is an edge). Keep the two in lock-step: the test suite runs both
backends against each other.
"""

from .errors import BudgetExhausted

BACKEND = "python"


def popcount(x):
    return bin(x).count("1")


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(adj, mask):
    """Split ``mask`` into connected components, ordered by lowest vertex."""
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def bfs_distances(adj, allowed, source):
    """Distances from ``source`` inside the vertex set ``allowed``; -1 if unreachable."""
    n = len(adj)
    dist = [-1] * n
    if not (allowed >> source) & 1:
        return dist
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _eccentricity(adj, mask, v):
    seen = 1 << v
    frontier = seen
    ecc = 0
    while True:
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        nxt &= mask & ~seen
        if not nxt:
            break
        ecc += 1
        seen |= nxt
        frontier = nxt
    return ecc if seen == mask else -1


def connected_subsets(adj, radius):
    """All nonempty vertex sets inducing a connected subgraph.

    With ``radius >= 0`` only sets having a centre that reaches every member
    within ``radius`` steps inside the set are kept. Returns a list of
    ``(mask, open_neighbourhood, centre)`` sorted by size, then mask.
    """
    n = len(adj)
    out = []
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        ecc = _eccentricity(adj, mask, low)
        if ecc < 0:
            continue
        centre = low
        if radius >= 0 and ecc > radius:
            centre = -1
            for v in _bits(mask):
                if _eccentricity(adj, mask, v) <= radius:
                    centre = v
                    break
            if centre < 0:
                continue
        nbr = 0
        for v in _bits(mask):
            nbr |= adj[v]
        out.append((mask, nbr & ~mask, centre))
    out.sort(key=lambda t: (popcount(t[0]), t[0]))
    return out


def minor_search(hadj, order, cand_masks, cand_nbrs, gmask, budget):
    """Find disjoint branch sets realising every edge of H.

    ``order`` is the H-vertex processing order; candidates are the admissible
    (connected, radius-bounded) G-vertex sets. Returns a list of branch-set
    masks indexed by H-vertex, or None. Raises BudgetExhausted once more than
    ``budget`` search nodes have been expanded.
    """
    hn = len(hadj)
    pos = [0] * hn
    for i, v in enumerate(order):
        pos[v] = i
    prev_nbrs = []
    n_future = []
    for i, v in enumerate(order):
        prev_nbrs.append([u for u in _bits(hadj[v]) if pos[u] < i])
        n_future.append(sum(1 for u in _bits(hadj[v]) if pos[u] > i))
    assigned = [0] * hn
    ncand = len(cand_masks)
    nodes = 0

    def rec(i, used):
        nonlocal nodes
        if i == hn:
            return True
        v = order[i]
        need = n_future[i]
        remaining = hn - i - 1
        prev = prev_nbrs[i]
        for j in range(ncand):
            c = cand_masks[j]
            if c & used:
                continue
            nb = cand_nbrs[j]
            ok = True
            for u in prev:
                if not nb & assigned[u]:
                    ok = False
                    break
            if not ok:
                continue
            free = gmask & ~used & ~c
            if popcount(nb & free) < need or popcount(free) < remaining:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(budget)
            assigned[v] = c
            if rec(i + 1, used | c):
                return True
        assigned[v] = 0
        return False

    if rec(0, 0):
        return list(assigned)
    return None


def _refine(adj, cells):
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        changed = False
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple(popcount(adj[v] & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _leaf_code(adj, order):
    code = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


def canonical_labeling(adj, colours):
    """Return ``(order, code)`` where ``order[p]`` is the vertex at canonical position p.

    Colour refinement followed by individualisation over the first smallest
    non-singleton cell; the leaf with the smallest upper-triangle adjacency
    code wins. Branches on twin vertices are skipped, since swapping two twins
    is an automorphism fixing the current partition.
    """
    n = len(adj)
    if n == 0:
        return (), 0
    byc = {}
    for v in range(n):
        byc.setdefault(colours[v], []).append(v)
    cells = _refine(adj, [byc[c] for c in sorted(byc)])
    best = [None, None]

    def search(cells):
        target = -1
        size = n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = idx, len(cell)
        if target < 0:
            order = [cell[0] for cell in cells]
            code = _leaf_code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            twin = False
            for u in tried:
                if (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                    twin = True
                    break
            if twin:
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(cells)
    return tuple(best[1]), best[0]


def treedepth(adj, mask, limit, memo):
    """Tree-depth of the subgraph induced by ``mask``, clipped to ``limit + 1``.

    ``memo`` maps masks to ``(value, exact)``; inexact entries are lower bounds.
    It must only be shared between calls on the same ``adj``.
    """
    if mask == 0:
        return 0
    if limit <= 0:
        return 1
    hit = memo.get(mask)
    if hit is not None:
        val, exact = hit
        if exact:
            return val if val <= limit else limit + 1
        if val > limit:
            return limit + 1
    comps = components(adj, mask)
    if len(comps) > 1:
        res = 0
        for c in comps:
            t = treedepth(adj, c, limit, memo)
            if t > limit:
                memo[mask] = (limit + 1, False)
                return limit + 1
            if t > res:
                res = t
        memo[mask] = (res, True)
        return res
    if mask & (mask - 1) == 0:
        memo[mask] = (1, True)
        return 1
    verts = sorted(_bits(mask), key=lambda v: (-popcount(adj[v] & mask), v))
    best = limit + 1
    for v in verts:
        if best <= 2:
            break
        t = treedepth(adj, mask & ~(1 << v), best - 2, memo)
        if t <= best - 2:
            best = t + 1
    if best <= limit:
        memo[mask] = (best, True)
    else:
        memo[mask] = (limit + 1, False)
    return best
