"""Independent oracles for the test suite.

Nothing here shares code with the paths under test: eigenvalues come from
Householder tridiagonalization plus Sturm-count bisection (the package
solver is cyclic Jacobi), and canonical forms come from brute force over
all permutations (the package uses branch-and-bound).
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from spectra_verify.graphs import Graph, pack_bits, upper_triangle_bits

_EPS = float(np.finfo(np.float64).eps)


def _tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix to tridiagonal (d, e)."""
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k].copy()
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            continue
        alpha = -np.copysign(norm, x[0]) if x[0] != 0.0 else -norm
        v = x.copy()
        v[0] -= alpha
        vnorm = float(np.linalg.norm(v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1:, k + 1:]
        w = sub @ v
        tau = float(v @ w)
        sub -= 2.0 * np.outer(v, w) + 2.0 * np.outer(w, v) - 4.0 * tau * np.outer(v, v)
        a[k + 1:, k] = 0.0
        a[k, k + 1:] = 0.0
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
    d = np.diagonal(a).copy()
    e = np.diagonal(a, 1).copy() if n > 1 else np.zeros(0)
    return d, e


def _count_below(d: np.ndarray, e2: np.ndarray, x: float, scale: float) -> int:
    """Sturm count: eigenvalues of the tridiagonal strictly below x."""
    count = 0
    q = 1.0
    for i in range(len(d)):
        if q != 0.0:
            q = d[i] - x - (e2[i - 1] / q if i > 0 else 0.0)
        else:
            q = d[i] - x - abs(np.sqrt(e2[i - 1]) if i > 0 else 0.0) / (_EPS * max(scale, 1.0))
        if q < 0.0:
            count += 1
    return count


def sturm_eigenvalues(a: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """All eigenvalues ascending by bisection on the Sturm count."""
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    d, e = _tridiagonalize(a)
    e2 = e * e
    radius = np.zeros(n)
    radius[:] = np.abs(d)
    if n > 1:
        radius[:-1] += np.abs(e)
        radius[1:] += np.abs(e)
    hi = float(radius.max())
    lo = -hi
    scale = max(hi, 1.0)
    out = np.zeros(n)
    for k in range(n):
        a_k, b_k = lo, hi
        while b_k - a_k > tol * scale:
            mid = 0.5 * (a_k + b_k)
            # eigenvalues 0..k-1 below mid means the k-th is still above
            if _count_below(d, e2, mid, scale) <= k:
                a_k = mid
            else:
                b_k = mid
        out[k] = 0.5 * (a_k + b_k)
    return out


def brute_force_canonical_bits(g: Graph) -> bytes:
    """Max packed upper-triangle encoding over every permutation (n <= 7)."""
    assert g.n <= 7, "brute force is factorial; keep it small"
    best = None
    for perm in permutations(range(g.n)):
        data = pack_bits(upper_triangle_bits(g.permute(list(perm))))
        if best is None or data > best:
            best = data
    return b"" if best is None else best


def are_isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = tuple(g2.adj)
    return any(
        tuple(g1.permute(list(perm)).adj) == target for perm in permutations(range(g1.n))
    )
