"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical form of a graph is the smallest column-major upper-triangle
adjacency bit sequence over the labelings reachable by degree refinement
and individualization.  Vertices that are twins (same neighborhood apart
from each other) are interchangeable, so only one of them is branched on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import SimpleGraph

CANON_CAP = 10
ENUM_CAP = 9


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: int

    @property
    def bitstring(self) -> str:
        m = self.n * (self.n - 1) // 2
        return format(self.bits, f"0{m}b") if m else ""


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    # cells are vertex bitmasks; split each by neighbor counts into every cell until stable
    while True:
        out: list[int] = []
        split = False
        for cm in cells:
            if not cm & (cm - 1):
                out.append(cm)
                continue
            groups: dict[tuple[int, ...], int] = {}
            c = cm
            while c:
                low = c & -c
                c ^= low
                r = rows[low.bit_length() - 1]
                key = tuple([(r & m).bit_count() for m in cells])
                groups[key] = groups.get(key, 0) | low
            if len(groups) == 1:
                out.append(cm)
                continue
            split = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


def _twin_classes(rows: tuple[int, ...], cell: int) -> list[int]:
    reps: list[int] = []
    c = cell
    while c:
        low = c & -c
        c ^= low
        v = low.bit_length() - 1
        for r in reps:
            if rows[v] & ~(1 << r) == rows[r] & ~low:
                break
        else:
            reps.append(v)
    return reps


def _leaf_bits(rows: tuple[int, ...], order: list[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def canonical_labeling(g: SimpleGraph) -> tuple[CanonicalForm, list[int]]:
    """Return the canonical form and a labeling ``perm`` realizing it.

    ``g.relabel(perm)`` is the canonical representative of ``g``'s class.
    """
    if g.n > CANON_CAP:
        raise CapExceeded(f"canonical form supports n <= {CANON_CAP}, got {g.n}")
    rows = g.rows
    best: list = [None, None]

    def search(cells: list[int]) -> None:
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            bits = _leaf_bits(rows, order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        for v in _twin_classes(rows, cell):
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:])

    search([(1 << g.n) - 1] if g.n else [])
    if g.n == 0:
        return CanonicalForm(0, 0), []
    order = best[1]
    perm = [0] * g.n
    for label, v in enumerate(order):
        perm[v] = label
    return CanonicalForm(g.n, best[0]), perm


def canonical_form(g: SimpleGraph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    form, perm = canonical_labeling(g)
    return g.relabel(perm)


def _last_edge(g: SimpleGraph) -> tuple[int, int]:
    # last pair in column-major order among the edges
    for j in range(g.n - 1, 0, -1):
        low = g.rows[j] & ((1 << j) - 1)
        if low:
            return low.bit_length() - 1, j
    raise ValueError("graph has no edges")


def iter_graphs(n: int) -> Iterator[SimpleGraph]:
    """Yield one canonical representative per isomorphism class on ``n`` vertices.

    Orderly generation by edge augmentation: a child is kept only when
    deleting its canonical last edge gives back the parent's class.
    Yields in generation order; see :func:`enumerate_graphs` for sorted output.
    """
    for g, _ in _generate(n):
        yield g


def _generate(n: int) -> Iterator[tuple[SimpleGraph, CanonicalForm]]:
    if not 1 <= n <= ENUM_CAP:
        raise CapExceeded(f"enumeration supports 1 <= n <= {ENUM_CAP}, got {n}")
    root = SimpleGraph(n, (0,) * n)
    stack = [(root, canonical_form(root))]
    while stack:
        parent, parent_form = stack.pop()
        yield parent, parent_form
        seen: set[CanonicalForm] = set()
        children = []
        for u, v in parent.complement_edges():
            child = parent.add_edge(u, v)
            form, perm = canonical_labeling(child)
            if form in seen:
                continue
            seen.add(form)
            canon = child.relabel(perm)
            a, b = _last_edge(canon)
            if canonical_form(canon.remove_edge(a, b)) == parent_form:
                children.append((canon, form))
        stack.extend(reversed(children))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[SimpleGraph, ...]:
    found = sorted(_generate(n), key=lambda pair: pair[1])
    return tuple(g for g, _ in found)


def enumerate_graphs(n: int) -> list[SimpleGraph]:
    """All graphs on ``n`` vertices up to isomorphism, sorted by canonical form."""
    return list(_enumerate_cached(n))
