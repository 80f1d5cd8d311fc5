"""Pure-Python implementations of the two hot kernels.

Same contracts as the compiled module ``_core``; selection happens in
``kernels``.  Kept dependency-light on purpose: numpy is used as an array
carrier, the algorithms themselves live here.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import CanonicalBudgetError

BACKEND_NAME = "python"


def jacobi_eigenvalues(a: np.ndarray, off_target: float, max_sweeps: int):
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Sweeps all off-diagonal pairs, rotating each to zero, until the
    off-diagonal Frobenius norm drops to ``off_target`` or ``max_sweeps``
    passes have run.  Returns ``(values, vectors, off, sweeps, converged)``
    with eigenvalues ascending and vector columns aligned; ``a`` is not
    modified.
    """
    w = np.array(a, dtype=np.float64, copy=True, order="C")
    n = w.shape[0]
    v = np.eye(n)
    sweeps = 0
    off = _off_norm(w)
    while off > off_target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(w[p, q])
                if apq == 0.0:
                    continue
                app = float(w[p, p])
                aqq = float(w[q, q])
                # Couplings negligible against both diagonal entries are
                # flushed instead of rotated; keeps tau finite.
                guard = 100.0 * abs(apq)
                if abs(app) + guard == abs(app) and abs(aqq) + guard == abs(aqq):
                    w[p, q] = 0.0
                    w[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = w[:, p].copy()
                col_q = w[:, q].copy()
                w[:, p] = c * col_p - s * col_q
                w[:, q] = s * col_p + c * col_q
                row_p = w[p, :].copy()
                row_q = w[q, :].copy()
                w[p, :] = c * row_p - s * row_q
                w[q, :] = s * row_p + c * row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        sweeps += 1
        off = _off_norm(w)
    values = np.diagonal(w).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order], off, sweeps, off <= off_target


def _off_norm(w: np.ndarray) -> float:
    off = w.copy()
    np.fill_diagonal(off, 0.0)
    return float(math.sqrt((off * off).sum()))


def canonical_bits(n: int, adj: Sequence[int], max_nodes: int = 0) -> bytes:
    """Lexicographically greatest upper-triangle encoding over all relabelings.

    Branch-and-bound over placement orders: candidates at each depth are
    tried in decreasing order of their adjacency pattern to the placed
    prefix, prefixes already below the incumbent are cut, and unplaced twin
    vertices (equal neighborhoods outside the pair) are interchangeable by
    an automorphism, so only one of each twin class is ever expanded.

    ``max_nodes`` bounds the search-tree size (0 = unlimited); exceeding it
    raises CanonicalBudgetError.
    """
    if n <= 1:
        return b""
    adj = [int(x) for x in adj]
    deg = [adj[v].bit_count() for v in range(n)]
    # Refined-degree ordering: degree, then sum of neighbor degrees.  Pure
    # search-order heuristic; correctness comes from the exhaustive search.
    nbrsum = [sum(deg[u] for u in _bit_indices(adj[v])) for v in range(n)]
    profile = sorted(range(n), key=lambda v: (-deg[v], -nbrsum[v], v))
    rank = [0] * n
    for pos, vertex in enumerate(profile):
        rank[vertex] = pos

    placed = [0] * n
    groups = [0] * n
    incumbent = [-1] * n
    state = {"mask": 0, "nodes": 0}

    def dfs(depth: int, tight: bool) -> bool:
        if depth == n:
            if not tight:
                incumbent[:] = groups
                return True
            return False
        state["nodes"] += 1
        if max_nodes and state["nodes"] > max_nodes:
            raise CanonicalBudgetError(
                f"canonical search exceeded {max_nodes} nodes at n = {n}"
            )
        mask = state["mask"]
        cands = []
        for vertex in range(n):
            if (mask >> vertex) & 1:
                continue
            gv = 0
            av = adj[vertex]
            for j in range(depth):
                gv = (gv << 1) | ((av >> placed[j]) & 1)
            cands.append((-gv, rank[vertex], vertex, gv))
        cands.sort()
        updated = False
        tried: list[tuple[int, int]] = []
        for _, _, vertex, gv in cands:
            if tight and gv < incumbent[depth]:
                break
            twin = False
            for gu, u in tried:
                if gu != gv:
                    continue
                drop = ~((1 << vertex) | (1 << u))
                if adj[u] & drop == adj[vertex] & drop:
                    twin = True
                    break
            if twin:
                continue
            child_tight = tight and gv == incumbent[depth]
            placed[depth] = vertex
            groups[depth] = gv
            state["mask"] = mask | (1 << vertex)
            if dfs(depth + 1, child_tight):
                updated = True
                tight = True
            state["mask"] = mask
            tried.append((gv, vertex))
        return updated

    dfs(0, True)
    bits = []
    for k in range(1, n):
        gk = incumbent[k]
        for j in range(k):
            bits.append((gk >> (k - 1 - j)) & 1)
    return _pack_bits(bits)


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pack_bits(bits) -> bytes:
    out = bytearray((len(bits) + 7) // 8)
    for t, b in enumerate(bits):
        if b:
            out[t >> 3] |= 0x80 >> (t & 7)
    return bytes(out)
