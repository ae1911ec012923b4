# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the kernels in ``_purekernels``.

Graphs are limited to 64 vertices (one machine word per adjacency row); the
dispatcher in ``kernels`` falls back to pure Python beyond that. Results are
identical to the pure versions, including canonical codes.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

from .errors import BudgetExhausted

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef inline int pc(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int lowbit(u64 x) nogil:
    return __builtin_ctzll(x)


cdef inline void load_adj(list adj, u64 *out, int n):
    cdef int i
    for i in range(n):
        out[i] = <u64>adj[i]


def popcount(x):
    return pc(<u64>x)


cdef u64 component_of(const u64 *adj, u64 mask, u64 seed) nogil:
    cdef u64 comp = seed, frontier = seed, nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[lowbit(f)]
            f &= f - 1
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def components(list adj, mask):
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef u64 m = <u64>mask, rest, comp
    load_adj(adj, a, n)
    out = []
    rest = m
    while rest:
        comp = component_of(a, m, rest & (~rest + 1))
        out.append(comp)
        rest &= ~comp
    return out


def bfs_distances(list adj, allowed, int source):
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef u64 al = <u64>allowed, seen, frontier, nxt, f
    cdef int d = 0, v
    load_adj(adj, a, n)
    dist = [-1] * n
    if not (al >> source) & 1:
        return dist
    dist[source] = 0
    seen = (<u64>1) << source
    frontier = seen
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            nxt |= a[lowbit(f)]
            f &= f - 1
        nxt &= al & ~seen
        f = nxt
        while f:
            v = lowbit(f)
            dist[v] = d
            f &= f - 1
        seen |= nxt
        frontier = nxt
    return dist


cdef int eccentricity(const u64 *adj, u64 mask, int v) nogil:
    cdef u64 seen = (<u64>1) << v, frontier = seen, nxt, f
    cdef int ecc = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[lowbit(f)]
            f &= f - 1
        nxt &= mask & ~seen
        if not nxt:
            break
        ecc += 1
        seen |= nxt
        frontier = nxt
    return ecc if seen == mask else -1


def connected_subsets(list adj, int radius):
    cdef int n = len(adj)
    cdef u64 a[64]
    cdef u64 mask, nbr, f, top
    cdef int ecc, centre, v, low
    load_adj(adj, a, n)
    if n > 30:
        raise ValueError("connected subset enumeration is limited to 30 vertices")
    top = (<u64>1) << n
    out = []
    mask = 1
    while mask < top:
        low = lowbit(mask)
        ecc = eccentricity(a, mask, low)
        if ecc >= 0:
            centre = low
            if radius >= 0 and ecc > radius:
                centre = -1
                f = mask
                while f:
                    v = lowbit(f)
                    if eccentricity(a, mask, v) <= radius:
                        centre = v
                        break
                    f &= f - 1
            if centre >= 0:
                nbr = 0
                f = mask
                while f:
                    nbr |= a[lowbit(f)]
                    f &= f - 1
                out.append((pc(mask), mask, nbr & ~mask, centre))
        mask += 1
    out.sort()
    return [(t[1], t[2], t[3]) for t in out]


cdef struct MinorState:
    int hn
    int ncand
    const u64 *cand
    const u64 *cnbr
    u64 gmask
    int *order
    int *prev
    int *prev_start
    int *need
    u64 assigned[64]
    long long nodes
    long long budget


cdef int minor_rec(MinorState *st, int i, u64 used) nogil:
    # 1 found, 0 exhausted subtree, -1 budget exceeded
    cdef int j, k, v, ok, r, remaining
    cdef u64 c, nb, free_
    if i == st.hn:
        return 1
    v = st.order[i]
    remaining = st.hn - i - 1
    for j in range(st.ncand):
        c = st.cand[j]
        if c & used:
            continue
        nb = st.cnbr[j]
        ok = 1
        for k in range(st.prev_start[i], st.prev_start[i + 1]):
            if not (nb & st.assigned[st.prev[k]]):
                ok = 0
                break
        if not ok:
            continue
        free_ = st.gmask & ~used & ~c
        if pc(nb & free_) < st.need[i] or pc(free_) < remaining:
            continue
        st.nodes += 1
        if st.nodes > st.budget:
            return -1
        st.assigned[v] = c
        r = minor_rec(st, i + 1, used | c)
        if r != 0:
            return r
    st.assigned[v] = 0
    return 0


def minor_search(list hadj, order, cand_masks, cand_nbrs, gmask, budget):
    cdef int hn = len(hadj)
    cdef int ncand = len(cand_masks)
    cdef MinorState st
    cdef int i, u, k, r
    cdef u64 h[64]
    cdef int pos[64]
    if hn > 64:
        raise ValueError("pattern graph too large for compiled kernel")
    load_adj(hadj, h, hn)
    cdef u64 *cand = <u64 *>malloc(max(ncand, 1) * sizeof(u64))
    cdef u64 *cnbr = <u64 *>malloc(max(ncand, 1) * sizeof(u64))
    cdef int *ordr = <int *>malloc(max(hn, 1) * sizeof(int))
    cdef int *need = <int *>malloc(max(hn, 1) * sizeof(int))
    cdef int *prev_start = <int *>malloc((hn + 1) * sizeof(int))
    cdef int *prev = <int *>malloc(max(hn * hn, 1) * sizeof(int))
    try:
        for i in range(ncand):
            cand[i] = <u64>cand_masks[i]
            cnbr[i] = <u64>cand_nbrs[i]
        for i in range(hn):
            ordr[i] = order[i]
            pos[ordr[i]] = i
        k = 0
        for i in range(hn):
            prev_start[i] = k
            need[i] = 0
            for u in range(hn):
                if (h[ordr[i]] >> u) & 1:
                    if pos[u] < i:
                        prev[k] = u
                        k += 1
                    else:
                        need[i] += 1
        prev_start[hn] = k
        st.hn = hn
        st.ncand = ncand
        st.cand = cand
        st.cnbr = cnbr
        st.gmask = <u64>gmask
        st.order = ordr
        st.prev = prev
        st.prev_start = prev_start
        st.need = need
        for i in range(64):
            st.assigned[i] = 0
        st.nodes = 0
        st.budget = budget
        with nogil:
            r = minor_rec(&st, 0, 0)
        if r < 0:
            raise BudgetExhausted(budget)
        if r == 0:
            return None
        return [st.assigned[i] for i in range(hn)]
    finally:
        free(cand)
        free(cnbr)
        free(ordr)
        free(need)
        free(prev_start)
        free(prev)


cdef struct Canon:
    int n
    u64 adj[64]
    int have_best
    u64 best_rows[64]
    int best_order[64]
    int *sig


cdef void refine(Canon *cs, int *perm, char *start) nogil:
    cdef int n = cs.n
    cdef int cid[64]
    cdef u64 cm[64]
    cdef int k, p, a, b, c, v, changed, q, w, cmp, t
    cdef int *sig = cs.sig
    while True:
        k = -1
        for p in range(n):
            if start[p]:
                k += 1
                cm[k] = 0
            cid[perm[p]] = k
            cm[k] |= (<u64>1) << perm[p]
        k += 1
        for v in range(n):
            for c in range(k):
                sig[v * 64 + c] = pc(cs.adj[v] & cm[c])
        changed = 0
        a = 0
        while a < n:
            b = a + 1
            while b < n and not start[b]:
                b += 1
            if b - a > 1:
                # stable insertion sort of perm[a:b] by signature row
                for p in range(a + 1, b):
                    w = perm[p]
                    q = p - 1
                    while q >= a:
                        cmp = 0
                        for c in range(k):
                            t = sig[perm[q] * 64 + c] - sig[w * 64 + c]
                            if t != 0:
                                cmp = t
                                break
                        if cmp <= 0:
                            break
                        perm[q + 1] = perm[q]
                        q -= 1
                    perm[q + 1] = w
                for p in range(a + 1, b):
                    for c in range(k):
                        if sig[perm[p] * 64 + c] != sig[perm[p - 1] * 64 + c]:
                            start[p] = 1
                            changed = 1
                            break
            a = b
        if not changed:
            return


cdef void canon_search(Canon *cs, int *perm, char *start) nogil:
    cdef int n = cs.n
    cdef int target = -1, size = n + 1, a, b, p, q, i, j, v, u, twin, ntried, better
    cdef int tried[64]
    cdef int nperm[64]
    cdef char nstart[64]
    cdef u64 rows[64]
    cdef u64 row
    a = 0
    while a < n:
        b = a + 1
        while b < n and not start[b]:
            b += 1
        if 1 < b - a < size:
            target = a
            size = b - a
        a = b
    if target < 0:
        for i in range(n):
            row = 0
            for j in range(i + 1, n):
                if (cs.adj[perm[i]] >> perm[j]) & 1:
                    row |= (<u64>1) << (n - 1 - j)
            rows[i] = row
        better = 0
        if not cs.have_best:
            better = 1
        else:
            for i in range(n):
                if rows[i] != cs.best_rows[i]:
                    better = rows[i] < cs.best_rows[i]
                    break
        if better:
            cs.have_best = 1
            for i in range(n):
                cs.best_rows[i] = rows[i]
                cs.best_order[i] = perm[i]
        return
    ntried = 0
    for p in range(target, target + size):
        v = perm[p]
        twin = 0
        for i in range(ntried):
            u = tried[i]
            if (cs.adj[u] & ~((<u64>1) << v)) == (cs.adj[v] & ~((<u64>1) << u)):
                twin = 1
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        memcpy(nperm, perm, n * sizeof(int))
        memcpy(nstart, start, n * sizeof(char))
        nperm[target] = v
        q = target + 1
        for i in range(target, target + size):
            if perm[i] != v:
                nperm[q] = perm[i]
                q += 1
        nstart[target + 1] = 1
        refine(cs, nperm, nstart)
        canon_search(cs, nperm, nstart)


def canonical_labeling(list adj, colours):
    cdef int n = len(adj)
    cdef Canon cs
    cdef int perm[64]
    cdef char start[64]
    cdef int i, p, j
    if n == 0:
        return (), 0
    if n > 64:
        raise ValueError("graph too large for compiled kernel")
    cs.n = n
    load_adj(adj, cs.adj, n)
    cs.have_best = 0
    byc = {}
    for i in range(n):
        byc.setdefault(colours[i], []).append(i)
    p = 0
    for c in sorted(byc):
        first = True
        for v in byc[c]:
            perm[p] = v
            start[p] = 1 if first else 0
            first = False
            p += 1
    cs.sig = <int *>malloc(64 * 64 * sizeof(int))
    try:
        with nogil:
            refine(&cs, perm, start)
            canon_search(&cs, perm, start)
    finally:
        free(cs.sig)
    code = 0
    for i in range(n):
        for j in range(i + 1, n):
            code = (code << 1) | ((cs.best_rows[i] >> (n - 1 - j)) & 1)
    return tuple(cs.best_order[i] for i in range(n)), code


cdef int td_rec(const u64 *adj, u64 mask, int limit, dict memo) except -1:
    cdef int t, res, best, nv, i, j, v, tmp
    cdef u64 rest, comp, f
    cdef int verts[64]
    cdef int degs[64]
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
    comp = component_of(adj, mask, mask & (~mask + 1))
    if comp != mask:
        res = 0
        rest = mask
        while rest:
            comp = component_of(adj, mask, rest & (~rest + 1))
            rest &= ~comp
            t = td_rec(adj, comp, limit, memo)
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
    nv = 0
    f = mask
    while f:
        v = lowbit(f)
        verts[nv] = v
        degs[nv] = pc(adj[v] & mask)
        nv += 1
        f &= f - 1
    # stable sort by decreasing degree, ties by vertex index
    for i in range(1, nv):
        v = verts[i]
        tmp = degs[i]
        j = i - 1
        while j >= 0 and degs[j] < tmp:
            verts[j + 1] = verts[j]
            degs[j + 1] = degs[j]
            j -= 1
        verts[j + 1] = v
        degs[j + 1] = tmp
    best = limit + 1
    for i in range(nv):
        if best <= 2:
            break
        t = td_rec(adj, mask & ~((<u64>1) << verts[i]), best - 2, memo)
        if t <= best - 2:
            best = t + 1
    if best <= limit:
        memo[mask] = (best, True)
    else:
        memo[mask] = (limit + 1, False)
    return best


def treedepth(list adj, mask, int limit, dict memo):
    cdef int n = len(adj)
    cdef u64 a[64]
    load_adj(adj, a, n)
    return td_rec(a, <u64>mask, limit, memo)
