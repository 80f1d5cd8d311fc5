"""Symmetric eigensolves and the two incidence-energy functionals.

The energies are sums of singular values: for the undirected incidence
matrix these are the square roots of the signless-Laplacian eigenvalues,
for the directed incidence matrix the square roots of the Laplacian
eigenvalues, so both energies come from symmetric eigensolves of the two
Laplacians and never require an explicit orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ContractViolation, ConvergenceError, NegativeEigenvalueError
from .graphs import Graph, laplacian, signless_laplacian

MAX_ORDER = 64

# Sub-eps tolerances are floored at a machine-precision scale so that the
# tightened re-check tolerance (1e-15) asks for the achievable limit instead
# of failing convergence unconditionally.
_EPS = float(np.finfo(np.float64).eps)


def _convergence_target(tol: float, n: int, frob: float) -> float:
    return max(tol, 4.0 * n * _EPS) * frob


def _residual_bound(tol: float, n: int, frob: float) -> float:
    # The reconstruction residual at convergence is dominated by the
    # discarded off-diagonal mass, i.e. it lands at the convergence target
    # itself; the assertion needs headroom above that target.
    return 4.0 * max(tol, 16.0 * n * _EPS) * frob


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of one symmetric matrix plus solve-quality metadata."""

    values: tuple[float, ...]
    residual: float
    orthogonality_defect: float

    def __post_init__(self):
        if any(self.values[i] > self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ContractViolation("spectrum values must be sorted ascending")

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def trace(self) -> float:
        return float(sum(self.values))


@dataclass(frozen=True)
class EnergyPair:
    """Both incidence energies of one graph and their gap e_x - e_d."""

    e_d: float
    e_x: float
    gap: float
    laplacian_spectrum: Spectrum = field(repr=False)
    signless_spectrum: Spectrum = field(repr=False)


def sym_eigenvalues(m: np.ndarray, tol: float = 1e-12, max_sweeps: int = 50) -> Spectrum:
    """All eigenvalues of a symmetric matrix by the cyclic Jacobi method.

    ``tol`` is relative: sweeps stop once the off-diagonal Frobenius norm
    falls below ``tol * ||m||_F``.  Raises ConvergenceError when 50 (or
    ``max_sweeps``) full sweeps were not enough, and ContractViolation for
    non-symmetric input or order above 64.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise ContractViolation(f"matrix order {n} exceeds supported bound {MAX_ORDER}")
    if tol <= 0.0:
        raise ContractViolation("tolerance must be positive")
    if not (a == a.T).all():
        raise ContractViolation("matrix is not symmetric")
    frob = float(np.sqrt((a * a).sum()))
    target = _convergence_target(tol, n, frob)
    values, vectors, off, sweeps, converged = kernels.jacobi_eigenvalues(a, target, max_sweeps)
    if not converged:
        raise ConvergenceError("Jacobi sweep limit reached before convergence", off, sweeps)
    residual = float(np.linalg.norm(vectors @ np.diag(values) @ vectors.T - a, "fro"))
    defect = float(np.abs(vectors.T @ vectors - np.eye(n)).max()) if n else 0.0
    bound = _residual_bound(tol, n, frob)
    if residual > bound:
        raise ConvergenceError(
            f"eigendecomposition residual {residual:.3e} above bound {bound:.3e}", off, sweeps
        )
    return Spectrum(tuple(float(x) for x in values), residual, defect)


def energy_of_spectrum(s: Spectrum, clamp_tol: float) -> float:
    """Sum of square roots of the eigenvalues, clamping solver noise at zero.

    Inputs are spectra of Gram matrices, so in exact arithmetic every value
    is non-negative; anything below ``-clamp_tol`` means the upstream solve
    is broken and raises NegativeEigenvalueError.  Values within the clamp
    band around zero are treated as exact zeros on both sides: sqrt turns
    1e-15 of solver noise on a kernel eigenvalue into 3e-8 of energy, and no
    graph in range has a true eigenvalue inside the band.
    """
    if s.order and s.values[0] < -clamp_tol:
        raise NegativeEigenvalueError(
            f"eigenvalue {s.values[0]:.6e} below -{clamp_tol:.3e}; upstream solve suspect"
        )
    return float(sum(math.sqrt(v) for v in s.values if v > clamp_tol))


def energy_pair(
    g: Graph,
    tol: float = 1e-12,
    *,
    clamp_rel: float = 1e-9,
    max_sweeps: int = 50,
) -> EnergyPair:
    """Both energies of one graph: e_d from the Laplacian spectrum, e_x from
    the signless-Laplacian spectrum, gap = e_x - e_d."""
    if g.n > MAX_ORDER:
        raise ContractViolation(f"graph order {g.n} exceeds supported bound {MAX_ORDER}")
    lap = laplacian(g)
    sig = signless_laplacian(g)
    l_spec = sym_eigenvalues(lap, tol, max_sweeps)
    q_spec = sym_eigenvalues(sig, tol, max_sweeps)
    e_d = energy_of_spectrum(l_spec, clamp_rel * _frob(lap))
    e_x = energy_of_spectrum(q_spec, clamp_rel * _frob(sig))
    return EnergyPair(e_d, e_x, e_x - e_d, l_spec, q_spec)


def singular_values_direct(m: np.ndarray, tol: float = 1e-12, *, clamp_rel: float = 1e-9) -> list[float]:
    """Singular values of a rectangular matrix via its left Gram matrix.

    Cross-check path: eigenvalues of M M^T, clamped and square-rooted,
    sorted descending.  Summing these for the incidence matrices must
    reproduce the energies computed from the Laplacians.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2:
        raise ContractViolation(f"expected a matrix, got ndim {a.ndim}")
    if a.shape[0] > MAX_ORDER:
        raise ContractViolation(f"row count {a.shape[0]} exceeds supported bound {MAX_ORDER}")
    gram = a @ a.T
    gram = (gram + gram.T) / 2.0  # exact for integer gram products
    spec = sym_eigenvalues(gram, tol)
    clamp_tol = clamp_rel * _frob(gram)
    if spec.order and spec.values[0] < -clamp_tol:
        raise NegativeEigenvalueError(
            f"Gram eigenvalue {spec.values[0]:.6e} below -{clamp_tol:.3e}"
        )
    # A rank argument gives exactly min(rows, cols) singular values; the
    # discarded Gram eigenvalues are zeros up to clamping.
    sigma = sorted(
        (math.sqrt(v) if v > clamp_tol else 0.0 for v in spec.values), reverse=True
    )
    return sigma[: min(a.shape)]


def _frob(a: np.ndarray) -> float:
    return float(np.sqrt((a * a).sum()))
