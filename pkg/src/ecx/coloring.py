"""Proper edge colorings: exact search, constructive Vizing coloring, Kempe chains.

Colors are the integers ``1..t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .graph import Edge, SimpleGraph


class ColoringError(ValueError):
    pass


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ProperEdgeColoring:
    graph: SimpleGraph
    t: int
    colors: Mapping[Edge, int] = field(repr=False)

    def __post_init__(self) -> None:
        edges = self.graph.edges()
        if set(self.colors) != set(edges):
            raise ColoringError("coloring must assign a color to exactly the host graph's edges")
        seen: dict[tuple[int, int], Edge] = {}
        for (u, v) in edges:
            c = self.colors[(u, v)]
            if not 1 <= c <= self.t:
                raise ColoringError(f"color {c} on {u}{v} outside 1..{self.t}")
            for w in (u, v):
                if (w, c) in seen:
                    raise ColoringError(f"edges {seen[(w, c)]} and {(u, v)} share color {c} at {w}")
                seen[(w, c)] = (u, v)

    def color(self, u: int, v: int) -> int:
        return self.colors[_key(u, v)]

    def present(self, u: int) -> frozenset[int]:
        """Colors on edges at ``u``."""
        return frozenset(self.colors[_key(u, w)] for w in self.graph.neighbors(u))

    def missing(self, u: int) -> frozenset[int]:
        return frozenset(range(1, self.t + 1)) - self.present(u)

    def color_class(self, c: int) -> list[Edge]:
        return sorted(e for e, col in self.colors.items() if col == c)

    @property
    def colors_used(self) -> int:
        return len(set(self.colors.values()))

    def to_lines(self) -> list[str]:
        return [f"{u} {v} {self.colors[(u, v)]}" for u, v in sorted(self.colors)]


def missing_colors(c: ProperEdgeColoring, u: int) -> frozenset[int]:
    return c.missing(u)


# -- exact search ------------------------------------------------------------


def _components(g: SimpleGraph) -> list[int]:
    comps = []
    left = (1 << g.n) - 1
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        left &= ~seen
    return comps


def _overfull(g: SimpleGraph, t: int) -> bool:
    # every color class is a matching, so a component on m vertices holds at most t*(m//2) edges
    for comp in _components(g):
        m = comp.bit_count()
        e = sum((g.rows[v] & comp).bit_count() for v in range(g.n) if comp >> v & 1) // 2
        if e > t * (m // 2):
            return True
    return False


def _search(g: SimpleGraph, t: int, all_solutions: bool) -> Iterator[dict[Edge, int]]:
    edges = g.edges()
    if not edges:
        yield {}
        return
    deg = g.degrees()
    full = (1 << t) - 1
    order = sorted(range(len(edges)), key=lambda i: (-(deg[edges[i][0]] + deg[edges[i][1]]), edges[i]))
    edges = [edges[i] for i in order]
    used = [0] * g.n
    assigned = [-1] * len(edges)
    class_size = [0] * t

    # pre-fix the colors at the lowest-index maximum-degree vertex
    top = max(range(g.n), key=lambda v: (deg[v], -v))
    fixed = sorted((i for i, (u, v) in enumerate(edges) if top in (u, v)),
                   key=lambda i: edges[i][0] + edges[i][1] - top)
    for c, i in enumerate(fixed):
        u, v = edges[i]
        assigned[i] = c
        used[u] |= 1 << c
        used[v] |= 1 << c
        class_size[c] += 1
    free = [i for i in range(len(edges)) if assigned[i] < 0]

    def pick() -> tuple[int, int]:
        best_i, best_avail, best_n = -1, 0, t + 1
        for i in free:
            if assigned[i] >= 0:
                continue
            u, v = edges[i]
            avail = full & ~(used[u] | used[v])
            k = avail.bit_count()
            if k < best_n:
                best_i, best_avail, best_n = i, avail, k
                if k == 0:
                    break
        return best_i, best_avail

    def rec(remaining: int) -> Iterator[None]:
        if remaining == 0:
            yield None
            return
        i, avail = pick()
        if not avail:
            return
        u, v = edges[i]
        tried_fresh = False
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length() - 1
            if class_size[c] == 0 and not all_solutions:
                # unused colors are interchangeable
                if tried_fresh:
                    continue
                tried_fresh = True
            assigned[i] = c
            used[u] |= low
            used[v] |= low
            class_size[c] += 1
            yield from rec(remaining - 1)
            class_size[c] -= 1
            used[u] ^= low
            used[v] ^= low
            assigned[i] = -1

    for _ in rec(len(free)):
        yield {edges[i]: assigned[i] + 1 for i in range(len(edges))}


def find_proper_coloring(g: SimpleGraph, t: int) -> ProperEdgeColoring | None:
    """A proper ``t``-edge-coloring of ``g``, or ``None`` when none exists.

    Complete backtracking: ``None`` means ``chi'(g) > t``.
    """
    if t < 0:
        raise ColoringError("palette size must be nonnegative")
    if g.edge_count() == 0:
        return ProperEdgeColoring(g, t, {})
    if t < g.max_degree or _overfull(g, t):
        return None
    for colors in _search(g, t, all_solutions=False):
        return ProperEdgeColoring(g, t, colors)
    return None


def iter_proper_colorings(g: SimpleGraph, t: int) -> Iterator[ProperEdgeColoring]:
    """Every proper ``t``-edge-coloring up to renaming of colors.

    The edges at the lowest-index maximum-degree vertex are pinned to colors
    ``1..d``; every coloring is a color permutation of exactly one yielded
    coloring when ``t`` equals the maximum degree.
    """
    if g.edge_count() == 0:
        yield ProperEdgeColoring(g, t, {})
        return
    if t < g.max_degree:
        return
    for colors in _search(g, t, all_solutions=True):
        yield ProperEdgeColoring(g, t, colors)


def chromatic_index_exact(g: SimpleGraph) -> int:
    if g.edge_count() == 0:
        return 0
    delta = g.max_degree
    return delta if find_proper_coloring(g, delta) is not None else delta + 1


def optimal_coloring(g: SimpleGraph) -> ProperEdgeColoring:
    """A proper coloring using exactly ``chi'(g)`` colors."""
    if g.edge_count() == 0:
        return ProperEdgeColoring(g, 0, {})
    found = find_proper_coloring(g, g.max_degree)
    return found if found is not None else vizing_plus_one_coloring(g)


# -- Vizing (Misra-Gries) ----------------------------------------------------


def vizing_plus_one_coloring(g: SimpleGraph) -> ProperEdgeColoring:
    """Color ``g`` with at most ``max_degree + 1`` colors by fan rotation and path inversion."""
    edges = g.edges()
    if not edges:
        return ProperEdgeColoring(g, 0, {})
    t = g.max_degree + 1
    palette = range(1, t + 1)
    color: dict[Edge, int] = {}
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # at[u][c] = neighbor along color c

    def free(u: int, c: int) -> bool:
        return c not in at[u]

    def lowest_free(u: int) -> int:
        return next(c for c in palette if c not in at[u])

    def setc(u: int, v: int, c: int) -> None:
        old = color.get(_key(u, v))
        if old is not None:
            del at[u][old]
            del at[v][old]
        color[_key(u, v)] = c
        at[u][c] = v
        at[v][c] = u

    def uncolor(u: int, v: int) -> None:
        old = color.pop(_key(u, v))
        del at[u][old]
        del at[v][old]

    for x, y in edges:
        fan = [y]
        in_fan = {y}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in g.neighbors(x):
                if w in in_fan:
                    continue
                cw = color.get(_key(x, w))
                if cw is not None and free(last, cw):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = lowest_free(x)
        d = lowest_free(fan[-1])
        # invert the cd-path from x
        if c != d:
            walk = []
            cur, want = x, d
            while want in at[cur]:
                nxt = at[cur][want]
                walk.append((cur, nxt, want))
                cur = nxt
                want = c if want == d else d
            for u, v, _ in walk:
                uncolor(u, v)
            for u, v, col in walk:
                setc(u, v, c if col == d else d)
        # longest fan prefix ending at a vertex where d is free
        stop = len(fan) - 1
        for i, w in enumerate(fan):
            if i > 0 and not free(fan[i - 1], color[_key(x, w)]):
                stop = i - 1
                break
            if free(w, d):
                stop = i
                break
        for i in range(stop):
            nxt_color = color[_key(x, fan[i + 1])]
            uncolor(x, fan[i + 1])
            setc(x, fan[i], nxt_color)
        setc(x, fan[stop], d)
    return ProperEdgeColoring(g, t, color)


# -- Kempe chains ------------------------------------------------------------


@dataclass(frozen=True)
class KempeChain:
    alpha: int
    beta: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    shape: str  # "path" or "cycle"

    @property
    def ends(self) -> tuple[int, ...]:
        """End vertices of a path-shaped chain (one vertex for a singleton)."""
        if self.shape == "cycle":
            return ()
        if not self.edges:
            return self.vertices
        count: dict[int, int] = {}
        for u, v in self.edges:
            count[u] = count.get(u, 0) + 1
            count[v] = count.get(v, 0) + 1
        return tuple(sorted(w for w, k in count.items() if k == 1))


def kempe_chain(c: ProperEdgeColoring, u: int, alpha: int, beta: int) -> KempeChain:
    """The component of the ``alpha``/``beta`` subgraph that contains ``u``."""
    if alpha == beta:
        raise ColoringError("Kempe chain needs two distinct colors")
    for col in (alpha, beta):
        if not 1 <= col <= c.t:
            raise ColoringError(f"color {col} outside palette 1..{c.t}")
    g = c.graph
    seen = {u}
    chain_edges: set[Edge] = set()
    stack = [u]
    while stack:
        w = stack.pop()
        for z in g.neighbors(w):
            if c.color(w, z) in (alpha, beta):
                chain_edges.add(_key(w, z))
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    shape = "cycle" if chain_edges and len(chain_edges) == len(seen) else "path"
    return KempeChain(alpha, beta, tuple(sorted(seen)), tuple(sorted(chain_edges)), shape)


def kempe_swap(c: ProperEdgeColoring, chain: KempeChain) -> ProperEdgeColoring:
    swap = {chain.alpha: chain.beta, chain.beta: chain.alpha}
    colors = dict(c.colors)
    for e in chain.edges:
        if colors.get(e) not in swap:
            raise ColoringError(f"edge {e} is not colored {chain.alpha} or {chain.beta}")
        colors[e] = swap[colors[e]]
    return ProperEdgeColoring(c.graph, c.t, colors)


def parse_coloring(g: SimpleGraph, lines: list[str], t: int | None = None) -> ProperEdgeColoring:
    colors: dict[Edge, int] = {}
    for line in lines:
        if not line.strip():
            continue
        u, v, col = (int(x) for x in line.split())
        colors[_key(u, v)] = col
    return ProperEdgeColoring(g, t if t is not None else max(colors.values(), default=0), colors)
