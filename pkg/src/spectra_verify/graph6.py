"""Bit-exact graph6 encoding for graphs with at most 62 vertices.

Layout: one leading byte ``n + 63``, then the upper-triangle adjacency bits
in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
6-bit groups, zero-padded to a multiple of six, each group emitted as one
ASCII byte offset by 63.  Only the short (single size byte) form is
supported; files hold one graph per line with an optional ``>>graph6<<``
header line.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, TextIO, Union

from .errors import Graph6Error, UnsupportedSizeError
from .graphs import Graph, graph_from_upper_bits, upper_triangle_bits

HEADER = ">>graph6<<"

_MIN_BYTE = 63
_MAX_BYTE = 126
_MAX_N = 62


def to_graph6(g: Graph) -> str:
    if g.n > _MAX_N:
        raise UnsupportedSizeError(
            f"graph6 short form supports n <= {_MAX_N}, got n = {g.n}"
        )
    out = [chr(g.n + _MIN_BYTE)]
    bits = upper_triangle_bits(g)
    for start in range(0, len(bits), 6):
        group = 0
        for offset in range(6):
            group <<= 1
            if start + offset < len(bits) and bits[start + offset]:
                group |= 1
        out.append(chr(group + _MIN_BYTE))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(text[0])
    if not (_MIN_BYTE <= first <= _MAX_BYTE):
        raise Graph6Error(f"size byte {first} outside {_MIN_BYTE}..{_MAX_BYTE}", 0)
    n = first - _MIN_BYTE
    if n > _MAX_N:
        raise UnsupportedSizeError(
            f"graph6 long form (n > {_MAX_N}) not supported, size byte at position 0"
        )
    nbits = n * (n - 1) // 2
    expected_len = 1 + (nbits + 5) // 6
    if len(text) != expected_len:
        raise Graph6Error(
            f"expected {expected_len} bytes for n = {n}, got {len(text)}",
            min(len(text), expected_len),
        )
    bits = []
    for pos in range(1, len(text)):
        byte = ord(text[pos])
        if not (_MIN_BYTE <= byte <= _MAX_BYTE):
            raise Graph6Error(f"byte {byte} outside {_MIN_BYTE}..{_MAX_BYTE}", pos)
        group = byte - _MIN_BYTE
        for offset in range(5, -1, -1):
            bits.append((group >> offset) & 1)
    for t in range(nbits, len(bits)):
        if bits[t]:
            raise Graph6Error("nonzero padding bit", 1 + t // 6)
    return graph_from_upper_bits(n, bits[:nbits])


def iter_graph6_file(source: Union[str, os.PathLike, TextIO]) -> Iterator[Graph]:
    """Parse a one-graph-per-line stream, skipping header and blank lines."""
    if hasattr(source, "read"):
        yield from _iter_lines(source)
    else:
        with open(source, "r", encoding="ascii") as handle:
            yield from _iter_lines(handle)


def _iter_lines(handle: TextIO) -> Iterator[Graph]:
    for line in handle:
        line = line.strip()
        if not line or line == HEADER:
            continue
        yield parse_graph6(line)


def write_graph6_file(path: Union[str, os.PathLike], graphs: Iterable[Graph]) -> int:
    """Write one graph per line; returns the number of graphs written."""
    count = 0
    with open(path, "w", encoding="ascii") as handle:
        for g in graphs:
            handle.write(to_graph6(g))
            handle.write("\n")
            count += 1
    return count
