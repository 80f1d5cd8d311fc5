"""Simple undirected graphs, structural predicates, and incidence-type matrices.

A graph on ``n`` labeled vertices is stored as one neighbor bitmask per
vertex.  Instances are immutable and hashable, so they are safe to share
across worker processes.  Edge and incidence-column order is fixed
everywhere to lexicographic ``(min endpoint, max endpoint)`` so that every
matrix in the package is reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ContractViolation


class Graph:
    """Immutable simple graph: no loops, no multi-edges, vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ContractViolation(f"vertex count must be non-negative, got {n}")
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ContractViolation(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise ContractViolation(f"vertex {v} has neighbors outside 0..{n - 1}")
            if (mask >> v) & 1:
                raise ContractViolation(f"vertex {v} has a self-loop")
        for v, mask in enumerate(adj):
            rest = mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if not (adj[u] >> v) & 1:
                    raise ContractViolation(f"adjacency not symmetric between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ContractViolation(f"edge ({i},{j}) outside 0..{n - 1}")
            if i == j:
                raise ContractViolation(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, adj)

    # -- basic accessors -----------------------------------------------------

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise ContractViolation(f"vertex {v} out of range 0..{self.n - 1}")
        return self.adj[v].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ContractViolation(f"vertex pair ({i},{j}) out of range")
        return bool((self.adj[i] >> j) & 1) and i != j

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, in lexicographic order."""
        out = []
        for i in range(self.n):
            rest = self.adj[i] >> (i + 1)
            j = i + 1
            while rest:
                if rest & 1:
                    out.append((i, j))
                rest >>= 1
                j += 1
        return out

    def neighbors(self, v: int) -> list[int]:
        if not (0 <= v < self.n):
            raise ContractViolation(f"vertex {v} out of range 0..{self.n - 1}")
        mask, out = self.adj[v], []
        while mask:
            u = (mask & -mask).bit_length() - 1
            out.append(u)
            mask &= mask - 1
        return out

    # -- derived graphs ------------------------------------------------------

    def toggle_edge(self, i: int, j: int) -> "Graph":
        """New graph with edge {i, j} flipped (the single move of the search)."""
        if i == j or not (0 <= i < self.n and 0 <= j < self.n):
            raise ContractViolation(f"cannot toggle pair ({i},{j})")
        adj = list(self.adj)
        adj[i] ^= 1 << j
        adj[j] ^= 1 << i
        return Graph(self.n, adj)

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel: vertex v of the result is vertex perm[v] of self."""
        if sorted(perm) != list(range(self.n)):
            raise ContractViolation("perm is not a permutation of 0..n-1")
        adj = [0] * self.n
        inv = [0] * self.n
        for new, old in enumerate(perm):
            inv[old] = new
        for old_v in range(self.n):
            mask = self.adj[old_v]
            while mask:
                old_u = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                adj[inv[old_v]] |= 1 << inv[old_u]
        return Graph(self.n, adj)


# -- small named graphs (handy for tests and docs) ---------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# -- upper-triangle bit order -------------------------------------------------
# Column order x(0,1), x(0,2), x(1,2), x(0,3), ... is the single bit order used
# by graph6, canonical forms, and labeled enumeration.


def upper_triangle_bits(g: Graph) -> list[int]:
    bits = []
    for k in range(1, g.n):
        col = g.adj[k]
        for i in range(k):
            bits.append((col >> i) & 1)
    return bits


def graph_from_upper_bits(n: int, bits: Sequence[int]) -> Graph:
    if len(bits) != n * (n - 1) // 2:
        raise ContractViolation(f"need {n * (n - 1) // 2} bits for n={n}, got {len(bits)}")
    adj = [0] * n
    t = 0
    for k in range(1, n):
        for i in range(k):
            if bits[t]:
                adj[i] |= 1 << k
                adj[k] |= 1 << i
            t += 1
    return Graph(n, adj)


def pack_bits(bits: Sequence[int]) -> bytes:
    """Pack a bit sequence MSB-first into bytes, zero-padded at the end."""
    out = bytearray((len(bits) + 7) // 8)
    for t, b in enumerate(bits):
        if b:
            out[t >> 3] |= 0x80 >> (t & 7)
    return bytes(out)


def unpack_bits(data: bytes, count: int) -> list[int]:
    return [(data[t >> 3] >> (7 - (t & 7))) & 1 for t in range(count)]


# -- structural predicates -----------------------------------------------------


def is_bipartite(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """BFS two-coloring per component; returns (flag, witness colors or None)."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False, None
    return True, color


def is_regular(g: Graph) -> Optional[int]:
    """Common degree k if the graph is regular, else None.  n=0 counts as 0-regular."""
    if g.n == 0:
        return 0
    k = g.degree(0)
    for v in range(1, g.n):
        if g.adj[v].bit_count() != k:
            return None
    return k


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """Component count plus a per-vertex component label (0-based, by discovery)."""
    labels = [-1] * g.n
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if labels[u] == -1:
                    labels[u] = count
                    queue.append(u)
        count += 1
    return count, labels


def is_connected(g: Graph) -> bool:
    return connected_components(g)[0] <= 1


# -- matrices -------------------------------------------------------------------
# Dense float64 throughout: orders stay small (n <= ~30), and constructors write
# both triangles from one value so symmetry is exact to the bit.


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Degree diagonal minus adjacency; every row sums to zero."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = -1.0
        a[j, i] = -1.0
    for v in range(g.n):
        a[v, v] = float(g.degree(v))
    return a


def signless_laplacian(g: Graph) -> np.ndarray:
    """Degree diagonal plus adjacency; row v sums to twice degree(v)."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = 1.0
        a[j, i] = 1.0
    for v in range(g.n):
        a[v, v] = float(g.degree(v))
    return a


def incidence_matrix(g: Graph) -> np.ndarray:
    """n-by-m (0,1) matrix; column for edge {i, j} has ones in rows i and j."""
    edges = g.edges()
    x = np.zeros((g.n, len(edges)))
    for c, (i, j) in enumerate(edges):
        x[i, c] = 1.0
        x[j, c] = 1.0
    return x


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge: forward[c] means edges[c] = (i, j) runs i -> j.

    Built for one specific graph; the edge tuple is kept so a mismatched
    graph/orientation pair is rejected instead of silently misread.
    """

    edges: tuple[tuple[int, int], ...]
    forward: tuple[bool, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.forward):
            raise ContractViolation("one direction flag per edge required")

    @classmethod
    def all_forward(cls, g: Graph) -> "Orientation":
        edges = tuple(g.edges())
        return cls(edges, (True,) * len(edges))

    @classmethod
    def from_flags(cls, g: Graph, flags: Sequence[bool]) -> "Orientation":
        return cls(tuple(g.edges()), tuple(bool(f) for f in flags))

    @classmethod
    def random(cls, g: Graph, rng) -> "Orientation":
        edges = tuple(g.edges())
        return cls(edges, tuple(bool(rng.getrandbits(1)) for _ in edges))

    def flipped(self, index: int) -> "Orientation":
        flags = list(self.forward)
        flags[index] = not flags[index]
        return Orientation(self.edges, tuple(flags))


def directed_incidence_matrix(g: Graph, o: Orientation) -> np.ndarray:
    """n-by-m (-1,0,1) matrix: -1 at the tail, +1 at the head of each edge."""
    if o.edges != tuple(g.edges()):
        raise ContractViolation("orientation was built for a different edge set")
    d = np.zeros((g.n, len(o.edges)))
    for c, ((i, j), fwd) in enumerate(zip(o.edges, o.forward)):
        tail, head = (i, j) if fwd else (j, i)
        d[tail, c] = -1.0
        d[head, c] = 1.0
    return d
