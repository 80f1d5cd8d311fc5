"""Isomorph-free exhaustive generation of simple graphs.

One representative per isomorphism class is produced by level-wise
canonical augmentation: every k-vertex representative is extended by a new
vertex attached to each of the 2^k neighborhood subsets, extensions are
canonicalized, and the level is deduplicated through a set of canonical
forms.  Each level is emitted sorted by canonical bits, so the output
order is a pure function of the vertex count.

Memory grows with the class count of the largest level (about 275k
canonical forms at 9 vertices), which is the price of level-wide dedup;
generation is restartable per level and parallelizes over parents.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterator, Optional

from . import kernels
from .errors import ContractViolation, UnsupportedSizeError
from .graphs import Graph, graph_from_upper_bits, unpack_bits

CANONICAL_MAX_N = 12
SOFT_CEILING = 9


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: two graphs compare equal iff isomorphic."""

    n: int
    bits: bytes


def canonical_form(g: Graph, *, max_n: int = CANONICAL_MAX_N, max_nodes: int = 0) -> CanonicalForm:
    """Lexicographically greatest upper-triangle encoding over all relabelings.

    ``max_n`` is the practical ceiling for the permutation search (raise it
    deliberately when you accept the cost); ``max_nodes`` optionally bounds
    the branch-and-bound tree, raising CanonicalBudgetError beyond it.
    """
    if g.n > max_n:
        raise UnsupportedSizeError(
            f"canonical form bounded at n = {max_n} (got {g.n}); pass max_n to override"
        )
    return CanonicalForm(g.n, kernels.canonical_bits(g.n, g.adj, max_nodes))


def canonical_representative(cf: CanonicalForm) -> Graph:
    """The graph whose upper-triangle bits equal the canonical encoding."""
    return graph_from_upper_bits(cf.n, unpack_bits(cf.bits, cf.n * (cf.n - 1) // 2))


def _adj_from_bits(n: int, data: bytes) -> list[int]:
    adj = [0] * n
    t = 0
    for k in range(1, n):
        for i in range(k):
            if (data[t >> 3] >> (7 - (t & 7))) & 1:
                adj[i] |= 1 << k
                adj[k] |= 1 << i
            t += 1
    return adj


def _extend_chunk(k: int, parent_bits: list[bytes]) -> list[bytes]:
    """Canonical forms of all one-vertex extensions of a batch of parents."""
    out = set()
    canon = kernels.canonical_bits
    for bits in parent_bits:
        base = _adj_from_bits(k, bits)
        for mask in range(1 << k):
            child = [base[v] | (((mask >> v) & 1) << k) for v in range(k)]
            child.append(mask)
            out.add(canon(k + 1, child, 0))
    return list(out)


def _extend_level(k: int, level_bits: list[bytes], workers: int) -> list[bytes]:
    if workers > 1 and len(level_bits) >= 2 * workers:
        chunks = [level_bits[i::workers] for i in range(workers)]
        with Pool(workers) as pool:
            parts = pool.starmap(_extend_chunk, [(k, c) for c in chunks])
        merged: set[bytes] = set()
        for part in parts:
            merged.update(part)
    else:
        merged = set(_extend_chunk(k, level_bits))
    return sorted(merged)


def canonical_levels(n_max: int, workers: int = 1) -> Iterator[tuple[int, list[bytes]]]:
    """Yield (k, sorted canonical bit strings of all k-vertex classes) for k = 1..n_max."""
    if n_max < 1:
        raise ContractViolation(f"need at least one vertex, got n = {n_max}")
    level: list[bytes] = [b""]
    yield 1, level
    for k in range(1, n_max):
        level = _extend_level(k, level, workers)
        yield k + 1, level


def enumerate_graphs(
    n: int,
    filter: Optional[Callable[[Graph], bool]] = None,
    *,
    workers: int = 1,
) -> Iterator[Graph]:
    """One representative per isomorphism class of simple graphs on n vertices.

    Deterministic: output is sorted by canonical bits.  The optional filter
    is applied after dedup, so unfiltered counts are class counts.  Above
    9 vertices generation still works but a cost warning is emitted.
    """
    if n < 1:
        raise ContractViolation(f"need at least one vertex, got n = {n}")
    if n > SOFT_CEILING:
        warnings.warn(
            f"enumerating all graphs on {n} vertices goes beyond the tested "
            f"ceiling of {SOFT_CEILING} and may take very long",
            stacklevel=2,
        )
    return _yield_level(n, filter, workers)


def _yield_level(n, filter, workers) -> Iterator[Graph]:
    level: list[bytes] = []
    for _, level in canonical_levels(n, workers):
        pass
    nbits = n * (n - 1) // 2
    previous = None
    for bits in level:
        assert bits != previous, "duplicate canonical form escaped level dedup"
        previous = bits
        g = graph_from_upper_bits(n, unpack_bits(bits, nbits))
        if filter is None or filter(g):
            yield g


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs, counting through edge bitmasks.

    Independent oracle for the class enumeration; bounded at n = 6 where
    the stream is 32768 graphs long.
    """
    if n < 0:
        raise ContractViolation(f"vertex count must be non-negative, got {n}")
    if n > 6:
        raise UnsupportedSizeError(f"labeled enumeration bounded at n = 6, got {n}")
    npairs = n * (n - 1) // 2
    for mask in range(1 << npairs):
        yield graph_from_upper_bits(n, [(mask >> t) & 1 for t in range(npairs)])
