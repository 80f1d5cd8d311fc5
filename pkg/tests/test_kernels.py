"""Both kernel lanes implement identical contracts."""

import random

import numpy as np
import pytest

from conftest import make_random_graph
from spectra_verify import CanonicalBudgetError, kernels
from spectra_verify import _core_py

compiled = pytest.importorskip(
    "spectra_verify._core", reason="compiled kernel lane not built"
)


def test_backend_is_selected():
    assert kernels.BACKEND in ("compiled", "python")


def test_canonical_bits_lanes_agree():
    rng = random.Random(101)
    for _ in range(300):
        g = make_random_graph(rng, rng.randrange(1, 10))
        assert compiled.canonical_bits(g.n, g.adj, 0) == _core_py.canonical_bits(
            g.n, g.adj, 0
        )


def test_jacobi_lanes_agree():
    nprng = np.random.default_rng(103)
    for _ in range(50):
        n = int(nprng.integers(1, 17))
        m = nprng.standard_normal((n, n))
        m = m + m.T
        frob = float(np.sqrt((m * m).sum()))
        va, _, _, _, ca = compiled.jacobi_eigenvalues(m, 1e-12 * frob, 50)
        vb, _, _, _, cb = _core_py.jacobi_eigenvalues(m, 1e-12 * frob, 50)
        assert ca and cb
        assert np.abs(va - vb).max() <= 1e-12 * frob


def test_jacobi_input_not_modified():
    nprng = np.random.default_rng(107)
    m = nprng.standard_normal((6, 6))
    m = m + m.T
    before = m.copy()
    for lane in (compiled, _core_py):
        lane.jacobi_eigenvalues(m, 1e-10, 50)
        assert np.array_equal(m, before)


def test_jacobi_zero_and_tiny_orders():
    for lane in (compiled, _core_py):
        values, vectors, off, sweeps, converged = lane.jacobi_eigenvalues(
            np.zeros((0, 0)), 0.0, 50
        )
        assert converged and len(values) == 0
        values, _, _, _, converged = lane.jacobi_eigenvalues(np.array([[3.0]]), 0.0, 50)
        assert converged and values.tolist() == [3.0]


def test_canonical_budget_error_both_lanes():
    # A 9-cycle needs more than a handful of nodes to canonicalize
    g = make_random_graph(random.Random(1), 9, p=0.5)
    for lane in (compiled, _core_py):
        with pytest.raises(CanonicalBudgetError):
            lane.canonical_bits(g.n, g.adj, 3)


def test_canonical_trivial_sizes():
    for lane in (compiled, _core_py):
        assert lane.canonical_bits(0, [], 0) == b""
        assert lane.canonical_bits(1, [0], 0) == b""


def test_canonical_highly_symmetric_graphs_fast():
    # Twin-skip must collapse complete and empty graphs to linear work
    for n in (20, 30):
        empty = [0] * n
        full = [((1 << n) - 1) ^ (1 << v) for v in range(n)]
        for lane in (compiled, _core_py):
            assert lane.canonical_bits(n, empty, 50_000) == bytes(
                bytearray((n * (n - 1) // 2 + 7) // 8)
            )
            bits = lane.canonical_bits(n, full, 50_000)
            assert all(b == 0xFF for b in bits[: n * (n - 1) // 2 // 8])
