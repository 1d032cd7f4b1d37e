"""(P3;k)-co-criticality, the minimum-edge bound, and the extremal construction."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coloring import ProperEdgeColoring, chromatic_index_exact, find_proper_coloring
from .graph import Edge, SimpleGraph, complete_graph

RAMSEY_CAP = 8
EXACT_J_CAP = 14


class ParameterError(ValueError):
    pass


def _ceil_half(d: int) -> int:
    return (d + 1) // 2


def ramsey_p3_formula(k: int) -> int:
    if k <= 0:
        raise ParameterError(f"k must be positive, got {k}")
    return 2 * _ceil_half(k) + 1


def ramsey_p3_bruteforce(k: int) -> int:
    """Least ``n`` such that every ``k``-coloring of ``K_n`` has a monochromatic P3.

    Such a coloring avoids monochromatic P3 exactly when it is proper, so this
    is the least ``n`` with ``chi'(K_n) > k``.
    """
    if not 1 <= k <= RAMSEY_CAP:
        raise ParameterError(f"k must lie in 1..{RAMSEY_CAP}, got {k}")
    n = 1
    while chromatic_index_exact(complete_graph(n)) <= k:
        n += 1
    return n


@dataclass(frozen=True)
class BoundParams:
    n: int
    d: int
    epsilon: int
    value: int

    @property
    def clique_order(self) -> int:
        return _ceil_half(self.d) + self.epsilon


def bound_min_edges(n: int, d: int) -> BoundParams:
    """Minimum edge count ``(d/2)(n - ceil(d/2) - eps) + C(ceil(d/2) + eps, 2)``.

    ``eps`` is ``(n - ceil(d/2)) mod 2``. The value is computed two ways and
    the results must agree.
    """
    if n < 1 or d < 0:
        raise ParameterError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    half = _ceil_half(d)
    eps = (n - half) % 2
    value = d * (n - half - eps) // 2 + comb(half + eps, 2)
    twice = d * n - (half + eps) * (d // 2 - eps + 1)
    if 2 * value != twice:
        raise ArithmeticError(f"bound forms disagree at n={n}, d={d}: {2 * value} != {twice}")
    return BoundParams(n, d, eps, value)


@dataclass(frozen=True)
class CoCriticalReport:
    graph: SimpleGraph
    k: int
    is_cocritical: bool
    chi: int
    max_degree: int
    failing_edge: Edge | None  # least non-edge whose addition stays k-colorable

    @property
    def colorable(self) -> bool:
        return self.chi <= self.k


def is_p3k_cocritical(g: SimpleGraph, k: int) -> CoCriticalReport:
    """Decide whether ``g`` is (P3;k)-co-critical.

    A k-coloring with no monochromatic P3 is a proper k-edge-coloring, so the
    test is: ``chi'(g) <= k`` and ``chi'(g + e) > k`` for every non-edge ``e``.
    """
    if k <= 0:
        raise ParameterError(f"k must be positive, got {k}")
    if g.is_complete():
        raise ParameterError("complete graphs cannot be co-critical")
    chi = chromatic_index_exact(g)
    delta = g.max_degree
    if chi > k:
        return CoCriticalReport(g, k, False, chi, delta, None)
    for u, v in g.complement_edges():
        if find_proper_coloring(g.add_edge(u, v), k) is not None:
            return CoCriticalReport(g, k, False, chi, delta, (u, v))
    if chi != k or delta != k:
        raise RuntimeError(f"co-critical graph with chi'={chi}, max degree={delta}, k={k}")
    return CoCriticalReport(g, k, True, chi, delta, None)


def one_factorization(m2: int) -> list[list[Edge]]:
    """Round-robin (circle method) 1-factorization of ``K_m2``.

    Vertex ``m2 - 1`` sits at the center; round ``r`` pairs it with ``r`` and
    pairs ``r + i`` with ``r - i`` modulo ``m2 - 1``.
    """
    if m2 < 2 or m2 % 2:
        raise ParameterError(f"need an even order >= 2, got {m2}")
    m = m2 - 1
    rounds = []
    for r in range(m):
        matching = [(r, m)]
        for i in range(1, m2 // 2):
            a, b = (r + i) % m, (r - i) % m
            matching.append((min(a, b), max(a, b)))
        rounds.append(sorted(matching))
    return rounds


def extremal_range_ok(n: int, k: int) -> bool:
    if k < 1 or n < 1:
        return False
    eps = (n - _ceil_half(k)) % 2
    return n >= (3 * k + 1) // 2 + 1 + eps


def construct_extremal(n: int, k: int) -> SimpleGraph:
    """``J + K_{ceil(k/2)+eps}``: ``J`` is the union of ``k`` rounds of a
    1-factorization on ``n - ceil(k/2) - eps`` vertices, followed by a disjoint clique."""
    if not extremal_range_ok(n, k):
        raise ParameterError(f"(n={n}, k={k}) outside n >= ceil(3k/2) + 1 + eps")
    p = bound_min_edges(n, k)
    m2 = n - p.clique_order
    edges = [e for matching in one_factorization(m2)[:k] for e in matching]
    edges += [(m2 + i, m2 + j) for i in range(p.clique_order) for j in range(i + 1, p.clique_order)]
    return SimpleGraph.from_edges(n, edges)


def matching_certificate(n: int, k: int) -> ProperEdgeColoring:
    """Proper ``k``-edge-coloring of ``construct_extremal(n, k)``.

    The 1-factorization rounds color ``J``; the clique is colored round-robin too.
    """
    g = construct_extremal(n, k)
    p = bound_min_edges(n, k)
    m2 = n - p.clique_order
    colors: dict[Edge, int] = {}
    for c, matching in enumerate(one_factorization(m2)[:k], 1):
        for e in matching:
            colors[e] = c
    q = p.clique_order
    if q >= 2:
        # K_q embeds in K_{q'} with q' even; its 1-factorization uses q'-1 <= k colors
        q_even = q + q % 2
        for c, matching in enumerate(one_factorization(q_even), 1):
            for a, b in matching:
                if b < q:
                    colors[(m2 + a, m2 + b)] = c
    return ProperEdgeColoring(g, k, colors)


@dataclass(frozen=True)
class ExtremalCertificate:
    graph: SimpleGraph
    k: int
    bound: BoundParams
    method: str  # "exact" or "construction"
    cocritical: bool

    @property
    def meets_bound(self) -> bool:
        return self.graph.edge_count() == self.bound.value


def certify_extremal(n: int, k: int) -> ExtremalCertificate:
    """Check the construction: exactly when ``J`` is small enough, otherwise by its certificate.

    The construction argument: ``J`` is k-regular and k-colored by its matchings,
    and any added edge creates maximum degree ``k + 1`` at no more than two
    vertices, which forces chromatic index ``k + 1`` there.
    """
    g = construct_extremal(n, k)
    p = bound_min_edges(n, k)
    if n - p.clique_order <= EXACT_J_CAP:
        return ExtremalCertificate(g, k, p, "exact", is_p3k_cocritical(g, k).is_cocritical)
    matching_certificate(n, k)  # raises unless proper
    deg = g.degrees()
    ok = g.max_degree == k
    for u, v in g.complement_edges():
        du, dv = deg[u] + 1, deg[v] + 1
        if max(du, dv) != k + 1:
            ok = False
            break
    return ExtremalCertificate(g, k, p, "construction", ok)
