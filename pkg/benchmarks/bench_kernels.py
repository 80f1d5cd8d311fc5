#!/usr/bin/env python3
"""Compare the compiled kernel lane against the pure-Python fallback.

Times the two hot kernels (cyclic Jacobi eigensolve, canonical-form search)
and one end-to-end enumeration level on both lanes.  Run from the repo root
after building the extension:

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

import numpy as np

from spectra_verify import _core_py

try:
    from spectra_verify import _core
except ImportError:
    _core = None


def _random_symmetric(nprng, n):
    m = nprng.standard_normal((n, n))
    return m + m.T


def _random_adj(rng, n, p=0.5):
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def bench_jacobi(lane, matrices):
    def run():
        for m, target in matrices:
            lane.jacobi_eigenvalues(m, target, 50)

    return run


def bench_canonical(lane, graphs):
    def run():
        for n, adj in graphs:
            lane.canonical_bits(n, adj, 0)

    return run


def bench_level(lane, parents, k):
    """One augmentation step k -> k+1 over real enumeration parents."""

    def run():
        seen = set()
        for bits_adj in parents:
            for mask in range(1 << k):
                child = [bits_adj[v] | (((mask >> v) & 1) << k) for v in range(k)]
                child.append(mask)
                seen.add(lane.canonical_bits(k + 1, child, 0))

    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled lane not built (python setup.py build_ext --inplace); timing fallback only")
    lanes = [("python", _core_py)] + ([("compiled", _core)] if _core else [])

    nprng = np.random.default_rng(1)
    rng = random.Random(1)
    count = 60 if args.quick else 300
    rows = []

    for order in (8, 12, 16, 24):
        matrices = []
        for _ in range(count):
            m = _random_symmetric(nprng, order)
            frob = float(np.sqrt((m * m).sum()))
            matrices.append((m, 1e-12 * frob))
        timings = {
            name: _time(bench_jacobi(lane, matrices), args.repeat) for name, lane in lanes
        }
        rows.append((f"jacobi order {order} x{count}", timings))

    for n in (8, 9, 10):
        graphs = [(n, _random_adj(rng, n)) for _ in range(count)]
        timings = {
            name: _time(bench_canonical(lane, graphs), args.repeat) for name, lane in lanes
        }
        rows.append((f"canonical n {n} x{count}", timings))

    from spectra_verify.enumeration import canonical_levels

    k = 5 if args.quick else 6
    level = []
    for depth, level_bits in canonical_levels(k):
        level = level_bits
    from spectra_verify.enumeration import _adj_from_bits

    parents = [_adj_from_bits(k, bits) for bits in level]
    timings = {
        name: _time(bench_level(lane, parents, k), args.repeat) for name, lane in lanes
    }
    rows.append((f"enumeration level {k}->{k + 1}", timings))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':<{width}}  python (s)"
    if _core:
        header += "  compiled (s)  speedup"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        line = f"{label:<{width}}  {timings['python']:10.4f}"
        if _core:
            line += f"  {timings['compiled']:12.4f}  {timings['python'] / timings['compiled']:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
