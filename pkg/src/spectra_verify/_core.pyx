# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: cyclic Jacobi sweep and canonical-form branch-and-bound.

Mirrors ``_core_py`` exactly; ``kernels`` picks whichever imports.
"""

import numpy as np

from libc.math cimport fabs, sqrt

from .errors import CanonicalBudgetError

BACKEND_NAME = "compiled"


cdef double _off_norm(double[:, ::1] w, Py_ssize_t n):
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += w[i, j] * w[i, j]
    return sqrt(acc)


def jacobi_eigenvalues(a, double off_target, int max_sweeps):
    """Cyclic Jacobi diagonalization; see the fallback lane for the contract."""
    w_arr = np.array(a, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] w = w_arr
    cdef Py_ssize_t n = w.shape[0]
    v_arr = np.eye(n)
    cdef double[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i
    cdef int sweeps = 0
    cdef double apq, app, aqq, guard, tau, t, c, s, xp, xq, off
    off = _off_norm(w, n)
    while off > off_target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if apq == 0.0:
                    continue
                app = w[p, p]
                aqq = w[q, q]
                # Couplings negligible against both diagonal entries are
                # flushed instead of rotated; keeps tau finite.
                guard = 100.0 * fabs(apq)
                if fabs(app) + guard == fabs(app) and fabs(aqq) + guard == fabs(aqq):
                    w[p, q] = 0.0
                    w[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    xp = w[i, p]
                    xq = w[i, q]
                    w[i, p] = c * xp - s * xq
                    w[i, q] = s * xp + c * xq
                for i in range(n):
                    xp = w[p, i]
                    xq = w[q, i]
                    w[p, i] = c * xp - s * xq
                    w[q, i] = s * xp + c * xq
                w[p, q] = 0.0
                w[q, p] = 0.0
                for i in range(n):
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * xp - s * xq
                    v[i, q] = s * xp + c * xq
        sweeps += 1
        off = _off_norm(w, n)
    values = np.diagonal(w_arr).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v_arr[:, order], off, sweeps, bool(off <= off_target)


cdef struct CanonCtx:
    int n
    unsigned long long adj[64]
    int rank[64]
    int placed[64]
    unsigned long long placed_mask
    unsigned long long groups[64]
    unsigned long long incumbent[64]
    bint have_incumbent
    long long nodes
    long long max_nodes


cdef inline int _popcount(unsigned long long x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef int _canon_dfs(CanonCtx* ctx, int depth, bint tight) except -1:
    cdef int n = ctx.n
    cdef int i, j, idx, v, count, tcount
    cdef unsigned long long gv, av, drop, one = 1
    cdef int cand_v[64]
    cdef unsigned long long cand_g[64]
    cdef int tried_v[64]
    cdef unsigned long long tried_g[64]
    cdef bint updated, child_tight, twin
    if depth == n:
        if not tight:
            for i in range(n):
                ctx.incumbent[i] = ctx.groups[i]
            ctx.have_incumbent = True
            return 1
        return 0
    ctx.nodes += 1
    if ctx.max_nodes > 0 and ctx.nodes > ctx.max_nodes:
        raise CanonicalBudgetError(
            f"canonical search exceeded {ctx.max_nodes} nodes at n = {ctx.n}"
        )
    count = 0
    for i in range(n):
        if (ctx.placed_mask >> i) & 1:
            continue
        av = ctx.adj[i]
        gv = 0
        for j in range(depth):
            gv = (gv << 1) | ((av >> ctx.placed[j]) & 1)
        cand_v[count] = i
        cand_g[count] = gv
        count += 1
    # insertion sort: group value descending, then static rank ascending
    cdef int cv
    cdef unsigned long long cg
    for i in range(1, count):
        cv = cand_v[i]
        cg = cand_g[i]
        j = i - 1
        while j >= 0 and (
            cand_g[j] < cg or (cand_g[j] == cg and ctx.rank[cand_v[j]] > ctx.rank[cv])
        ):
            cand_v[j + 1] = cand_v[j]
            cand_g[j + 1] = cand_g[j]
            j -= 1
        cand_v[j + 1] = cv
        cand_g[j + 1] = cg
    updated = False
    tcount = 0
    for idx in range(count):
        v = cand_v[idx]
        gv = cand_g[idx]
        if tight and ctx.have_incumbent and gv < ctx.incumbent[depth]:
            break
        twin = False
        for j in range(tcount):
            if tried_g[j] == gv:
                drop = ~((one << v) | (one << tried_v[j]))
                if (ctx.adj[tried_v[j]] & drop) == (ctx.adj[v] & drop):
                    twin = True
                    break
        if twin:
            continue
        child_tight = tight and ctx.have_incumbent and gv == ctx.incumbent[depth]
        ctx.placed[depth] = v
        ctx.groups[depth] = gv
        ctx.placed_mask |= one << v
        if _canon_dfs(ctx, depth + 1, child_tight) == 1:
            updated = True
            tight = True
        ctx.placed_mask &= ~(one << v)
        tried_v[tcount] = v
        tried_g[tcount] = gv
        tcount += 1
    return 1 if updated else 0


def canonical_bits(int n, adj, long long max_nodes=0):
    """Greatest upper-triangle encoding over all relabelings, packed MSB-first."""
    if n <= 1:
        return b""
    if n > 62:
        raise ValueError(f"canonical kernel supports n <= 62, got {n}")
    cdef CanonCtx ctx
    cdef int i, j, k, t
    cdef unsigned long long av
    cdef long long key[64]
    cdef int order[64]
    cdef int deg[64]
    ctx.n = n
    for i in range(n):
        ctx.adj[i] = adj[i]
    for i in range(n):
        deg[i] = _popcount(ctx.adj[i])
    # refined-degree ordering: degree, then sum of neighbor degrees
    cdef long long nbrsum
    for i in range(n):
        nbrsum = 0
        av = ctx.adj[i]
        j = 0
        while av:
            if av & 1:
                nbrsum += deg[j]
            av >>= 1
            j += 1
        key[i] = (<long long> deg[i]) * 8192 + nbrsum
        order[i] = i
    cdef int ov
    for i in range(1, n):
        ov = order[i]
        j = i - 1
        while j >= 0 and (
            key[order[j]] < key[ov] or (key[order[j]] == key[ov] and order[j] > ov)
        ):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = ov
    for i in range(n):
        ctx.rank[order[i]] = i
    ctx.placed_mask = 0
    ctx.have_incumbent = False
    ctx.nodes = 0
    ctx.max_nodes = max_nodes
    for i in range(n):
        ctx.groups[i] = 0
        ctx.incumbent[i] = 0
    _canon_dfs(&ctx, 0, True)
    nbits = n * (n - 1) // 2
    out = bytearray((nbits + 7) // 8)
    cdef unsigned char[::1] buf = out
    cdef unsigned long long gk
    t = 0
    for k in range(1, n):
        gk = ctx.incumbent[k]
        for j in range(k):
            if (gk >> (k - 1 - j)) & 1:
                buf[t >> 3] |= 0x80 >> (t & 7)
            t += 1
    return bytes(out)
