"""Labeled simple graphs on vertices ``0..n-1`` backed by bitset adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised on invalid graph construction or edit requests."""


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {v},{u}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.rows[v] >> u & 1]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.rows[u] >> v & 1]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def complement_edges(self) -> list[Edge]:
        """Non-adjacent pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.rows[u] >> v & 1]

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    # -- edits -----------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}{v} already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return _trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "SimpleGraph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}{v} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return _trusted(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            new = 0
            while row:
                low = row & -row
                new |= 1 << perm[low.bit_length() - 1]
                row ^= low
            rows[perm[v]] = new
        return _trusted(self.n, tuple(rows))

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"loop {u}{v} is not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"pair {u}{v} outside 0..{self.n - 1}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


def _trusted(n: int, rows: tuple[int, ...]) -> SimpleGraph:
    # skips validation; callers guarantee symmetric irreflexive rows
    g = object.__new__(SimpleGraph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", rows)
    return g


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    shift = g1.n
    return SimpleGraph(g1.n + g2.n, g1.rows + tuple(r << shift for r in g2.rows))


def complete_graph(n: int) -> SimpleGraph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> SimpleGraph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    return SimpleGraph(n, (0,) * n)


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> SimpleGraph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)
