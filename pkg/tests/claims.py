"""Instance checks for the structural facts about saturated class-1 graphs.

Each checker returns a list of violation messages (empty when everything holds).
"""

from __future__ import annotations

from itertools import combinations

from ecx.cocritical import bound_min_edges
from ecx.coloring import ProperEdgeColoring, iter_proper_colorings, kempe_chain
from ecx.criticality import classify, degree_partition, is_critical_edge, is_saturated_class1, val_check, EdgeClass
from ecx.graph import SimpleGraph


def saturated_graphs(graphs):
    return [g for g in graphs if g.edge_count() and is_saturated_class1(g)]


def isolated_vertex_check(g: SimpleGraph) -> list[str]:
    """An isolated vertex forces all other degrees to max degree, so the edge count clears the bound."""
    deg = g.degrees()
    delta = g.max_degree
    if min(deg) > 0:
        return []
    out = []
    if deg.count(0) != 1 or any(d not in (0, delta) for d in deg):
        out.append(f"{g}: isolated vertex but degrees {deg}")
    if 2 * g.edge_count() != delta * (g.n - 1):
        out.append(f"{g}: isolated vertex but e != delta(n-1)/2")
    if g.edge_count() < bound_min_edges(g.n, delta).value:
        out.append(f"{g}: below bound")
    return out


def pair_checks(g: SimpleGraph, c: ProperEdgeColoring) -> list[str]:
    """Non-adjacent low-degree pairs: chain endpoints, disjoint missing sets, degree sum."""
    part = degree_partition(g)
    out = []
    for u, v in combinations(part.low, 2):
        if g.has_edge(u, v):
            continue
        if c.missing(u) & c.missing(v):
            out.append(f"{g}: missing colors of {u},{v} intersect")
        if g.degree(u) + g.degree(v) < part.delta:
            out.append(f"{g}: d({u})+d({v}) < delta")
        for a in c.present(u) - c.present(v):
            for b in c.present(v) - c.present(u):
                for s, t, x, y in ((u, v, a, b), (v, u, b, a)):
                    ch = kempe_chain(c, s, x, y)
                    if ch.shape != "path" or ch.ends != tuple(sorted((s, t))):
                        out.append(f"{g}: ({x},{y})-chain at {s} does not end at {t}")
    return out


def outside_checks(g: SimpleGraph, c: ProperEdgeColoring) -> list[str]:
    """Low vertices outside N[x]: disjoint missing sets inside the colors at x, and x sees a max-degree vertex."""
    part = degree_partition(g)
    if part.x is None or part.ell == 0:
        return []
    x = part.x
    out = []
    missing = [c.missing(y) for y in part.outside]
    for i, j in combinations(range(len(missing)), 2):
        if missing[i] & missing[j]:
            out.append(f"{g}: missing sets of {part.outside[i]},{part.outside[j]} intersect")
    if any(not m <= c.present(x) for m in missing):
        out.append(f"{g}: a missing set is not inside the colors at x={x}")
    if sum(len(m) for m in missing) > g.degree(x):
        out.append(f"{g}: missing sets exceed d(x)")
    if not any(g.degree(w) == part.delta for w in g.neighbors(x)):
        out.append(f"{g}: x={x} has no maximum-degree neighbor")
    return out


def saturated_violations(g: SimpleGraph) -> tuple[list[str], int]:
    out = isolated_vertex_check(g)
    count = 0
    for c in iter_proper_colorings(g, g.max_degree):
        count += 1
        out += pair_checks(g, c)
        out += outside_checks(g, c)
    return out, count


def val_violations(g: SimpleGraph) -> tuple[list[str], int]:
    if not g.edge_count() or classify(g).label is not EdgeClass.CLASS2:
        return [], 0
    out = []
    if g.degrees().count(g.max_degree) < 3:
        out.append(f"{g}: class 2 with fewer than three maximum-degree vertices")
    checked = 0
    for x, y in g.edges():
        if not is_critical_edge(g, x, y):
            continue
        checked += 1
        for r in val_check(g, x, y):
            if not r.holds:
                out.append(f"{g}: adjacency lemma fails at x={r.x}, y={r.y}")
    return out, checked
