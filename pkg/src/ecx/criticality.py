"""Class 1/2 classification, critical edges, adjacency-lemma checks and saturation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coloring import chromatic_index_exact, find_proper_coloring
from .graph import SimpleGraph


class NotApplicable(ValueError):
    pass


class EdgeClass(str, Enum):
    CLASS1 = "class1"
    CLASS2 = "class2"


@dataclass(frozen=True)
class ClassLabel:
    label: EdgeClass
    chi: int
    delta: int


def classify(g: SimpleGraph) -> ClassLabel:
    if g.edge_count() == 0:
        raise NotApplicable("edgeless graphs have no class")
    chi = chromatic_index_exact(g)
    delta = g.max_degree
    return ClassLabel(EdgeClass.CLASS1 if chi == delta else EdgeClass.CLASS2, chi, delta)


def _require_edge(g: SimpleGraph, u: int, v: int) -> None:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise NotApplicable(f"{u}{v} is not an edge")


def is_critical_edge(g: SimpleGraph, u: int, v: int) -> bool:
    _require_edge(g, u, v)
    return chromatic_index_exact(g.remove_edge(u, v)) < chromatic_index_exact(g)


def is_delta_critical(g: SimpleGraph) -> bool:
    if g.edge_count() == 0:
        raise NotApplicable("edgeless graphs have no class")
    if not g.is_connected():
        return False
    chi = chromatic_index_exact(g)
    if chi == g.max_degree:
        return False
    return all(chromatic_index_exact(g.remove_edge(u, v)) < chi for u, v in g.edges())


@dataclass(frozen=True)
class ValReport:
    x: int
    y: int
    required: int
    found: int

    @property
    def holds(self) -> bool:
        return self.found >= self.required


def val_check(g: SimpleGraph, x: int, y: int) -> tuple[ValReport, ValReport]:
    """Adjacency-lemma counts at the critical edge ``xy``, for both orientations.

    For orientation ``(x, y)``: ``required = max_degree + 1 - d(y)`` and ``found`` is
    the number of neighbors of ``x`` in ``g - xy`` whose degree there equals the
    maximum degree of ``g``.
    """
    _require_edge(g, x, y)
    label = classify(g)
    if label.label is not EdgeClass.CLASS2:
        raise NotApplicable("graph is class 1")
    if not is_critical_edge(g, x, y):
        raise NotApplicable(f"{x}{y} is not a critical edge")
    delta = label.delta
    h = g.remove_edge(x, y)
    deg = h.degrees()

    def one(a: int, b: int) -> ValReport:
        found = sum(1 for w in h.neighbors(a) if deg[w] == delta)
        return ValReport(a, b, delta + 1 - g.degree(b), found)

    return one(x, y), one(y, x)


def is_saturated_class1(g: SimpleGraph) -> bool:
    """Class 1 and every added edge pushes the chromatic index to ``max_degree + 1``.

    Edgeless graphs count as class 1 with ``max_degree = 0``; complete graphs
    satisfy the condition vacuously when class 1.
    """
    delta = g.max_degree
    if g.edge_count() and find_proper_coloring(g, delta) is None:
        return False
    for u, v in g.complement_edges():
        if chromatic_index_exact(g.add_edge(u, v)) != delta + 1:
            return False
    return True


@dataclass(frozen=True)
class DegreePartition:
    delta: int
    low: tuple[int, ...]  # degree <= delta - 1
    high: tuple[int, ...]  # degree == delta
    x: int | None  # lowest-index minimum-degree vertex; None when regular
    closed_nbhd: tuple[int, ...]
    outside: tuple[int, ...]  # low vertices not in the closed neighborhood of x

    @property
    def ell(self) -> int:
        return len(self.outside)

    @property
    def regular(self) -> bool:
        return self.x is None


def degree_partition(g: SimpleGraph) -> DegreePartition:
    delta = g.max_degree
    if delta == 0:
        raise NotApplicable("degree partition needs at least one edge")
    deg = g.degrees()
    low = tuple(v for v in g if deg[v] <= delta - 1)
    high = tuple(v for v in g if deg[v] == delta)
    if not low:
        return DegreePartition(delta, low, high, None, (), ())
    delta_min = min(deg)
    x = next(v for v in g if deg[v] == delta_min)
    closed = tuple(sorted(set(g.neighbors(x)) | {x}))
    outside = tuple(v for v in low if v not in closed)
    return DegreePartition(delta, low, high, x, closed, outside)
