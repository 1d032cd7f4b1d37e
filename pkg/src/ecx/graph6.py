"""graph6 encoding for graphs with at most 62 vertices (short size header only)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import SimpleGraph

HEADER = ">>graph6<<"
MAX_VERTICES = 62


class Graph6Error(ValueError):
    pass


def _pair_order(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: SimpleGraph) -> str:
    if g.n > MAX_VERTICES:
        raise Graph6Error(f"graph6 long form (n={g.n} > {MAX_VERTICES}) is not supported")
    bits = [g.rows[i] >> j & 1 for i, j in _pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(s: str) -> SimpleGraph:
    line = s.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 string")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable graph6 range 63..126")
    n = ord(line[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error("graph6 long-form size header is not supported")
    payload = line[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(payload) != expected:
        raise Graph6Error(f"payload has {len(payload)} bytes, expected {expected} for n={n}")
    bits: list[int] = []
    for ch in payload:
        value = ord(ch) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    for bit, (i, j) in zip(bits, _pair_order(n)):
        if bit:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return SimpleGraph(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[SimpleGraph]:
    """Parse one graph per non-blank line."""
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        try:
            yield parse_graph6(raw)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def write_graph6(graphs: Iterable[SimpleGraph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
        count += 1
    return count
