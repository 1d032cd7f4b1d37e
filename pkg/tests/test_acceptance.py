"""Acceptance criteria, one test each.

Every test records a single ``PASS``/``FAIL`` line (shown in the terminal
summary under "acceptance criteria") and fails if its check or its runtime
budget fails.  Run standalone with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from math import ceil

import pytest

from ecx.canon import enumerate_graphs
from ecx.cocritical import (
    bound_min_edges,
    construct_extremal,
    is_p3k_cocritical,
    ramsey_p3_bruteforce,
)
from ecx.coloring import chromatic_index_exact, find_proper_coloring, vizing_plus_one_coloring
from ecx.graph6 import encode_graph6, parse_graph6
from ecx.harness import emit_report, stable_section, sweep, verify_lower, verify_song

from claims import saturated_graphs, saturated_violations, val_violations
from conftest import ACCEPTANCE_LINES
from oracles import proper_by_pairs

# exhaustive minima; (7,3) is 9, matching the bound formula and the K4+K3 witness
EXPECTED_MINIMA = {(5, 2): 4, (6, 2): 5, (7, 2): 6, (8, 2): 7, (4, 1): 2, (7, 3): 9}


def _record(number: int, title: str, ok: bool, seconds: float, budget: float, detail: str) -> None:
    in_budget = seconds <= budget
    status = "PASS" if ok and in_budget else "FAIL"
    line = f"[{status}] {number}. {title}: {detail} ({seconds:.1f}s, budget {budget:.0f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert in_budget, line


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_1_lower_bound():
    reports, secs = _timed(lambda: [verify_lower(n, k) for n in range(3, 9) for k in range(1, 4)])
    failing = [(r.n, r.d) for r in reports if not r.bound_holds]
    got = {(r.n, r.d): (r.min_edges, r.bound_value) for r in reports}
    wrong = {nk: got[nk] for nk, m in EXPECTED_MINIMA.items() if got[nk] != (m, m)}
    ok = not failing and not wrong and len(reports) == 18
    detail = f"{len(reports)} cells, bound holds everywhere={not failing}, exact minima {sorted(got[nk][0] for nk in EXPECTED_MINIMA)}"
    if wrong:
        detail += f", mismatches {wrong}"
    _record(1, "lower bound n 3..8, k 1..3", ok, secs, 300, detail)


def test_2_song_bound():
    reports, secs = _timed(lambda: [verify_song(n, d) for n in range(3, 9) for d in range(0, 4)])
    failing = [(r.n, r.d) for r in reports if not r.bound_holds]
    _record(2, "saturated class-1 bound n 3..8, delta 0..3", not failing and len(reports) == 24, secs, 600,
            f"{len(reports)} cells, failures {failing}")


def test_3_sharpness():
    def run():
        bad, checked = [], 0
        for k in range(1, 5):
            for n in range(ceil(3 * k / 2) + 2, 13):
                g = construct_extremal(n, k)
                checked += 1
                if not is_p3k_cocritical(g, k).is_cocritical or g.edge_count() != bound_min_edges(n, k).value:
                    bad.append((n, k))
        return bad, checked
    (bad, checked), secs = _timed(run)
    _record(3, "extremal construction meets the bound", not bad and checked > 0, secs, 120,
            f"{checked} (n,k) pairs, failures {bad}")


def test_4_ramsey():
    values, secs = _timed(lambda: [ramsey_p3_bruteforce(k) for k in range(1, 7)])
    expected = [2 * ceil(k / 2) + 1 for k in range(1, 7)]
    _record(4, "r(P3;k) brute force vs 2ceil(k/2)+1, k 1..6", values == expected, secs, 60,
            f"got {values}")


def test_5_vizing_sandwich():
    def run():
        bad, count = [], 0
        for n in range(1, 8):
            for g in enumerate_graphs(n):
                if not g.edge_count():
                    continue
                count += 1
                d = g.max_degree
                chi = chromatic_index_exact(g)
                below = find_proper_coloring(g, d - 1) is None
                c = vizing_plus_one_coloring(g)
                if not (d <= chi <= d + 1 and below and c.colors_used <= d + 1
                        and proper_by_pairs(g, dict(c.colors), d + 1)):
                    bad.append(encode_graph6(g))
        return bad, count
    (bad, count), secs = _timed(run)
    _record(5, "Vizing sandwich n 1..7", not bad, secs, 300, f"{count} graphs, failures {bad[:5]}")


def test_6_proof_machinery():
    def run():
        sat = [g for n in range(1, 8) for g in saturated_graphs(enumerate_graphs(n)) if not g.is_complete()]
        violations, colorings = [], 0
        for g in sat:
            v, c = saturated_violations(g)
            violations += v
            colorings += c
        val_bad, critical = [], 0
        for n in range(1, 8):
            for g in enumerate_graphs(n):
                v, c = val_violations(g)
                val_bad += v
                critical += c
        return sat, violations, colorings, val_bad, critical
    (sat, violations, colorings, val_bad, critical), secs = _timed(run)
    ok = not violations and not val_bad and colorings > 0 and critical > 0
    _record(6, "saturated-graph claims and adjacency lemma n <= 7", ok, secs, 600,
            f"{len(sat)} saturated graphs, {colorings} colorings, {critical} critical edges, "
            f"violations {(violations + val_bad)[:3]}")


def test_7_determinism():
    def run():
        outputs = {}
        for jobs in (1, 2, 8):
            lower = sweep(range(6, 9), range(1, 4), "lower", jobs=jobs)
            song = sweep(range(6, 9), range(2, 4), "song", jobs=jobs)
            outputs[jobs] = stable_section(emit_report(lower + song, "json", timing=True))
        return outputs
    outputs, secs = _timed(run)
    same = outputs[1] == outputs[2] == outputs[8]
    _record(7, "stable JSON identical for 1, 2, 8 workers", same, secs, 600,
            f"{len(outputs[1])} bytes per run")


def test_8_graph6():
    def run():
        corpus = ["Bw", "C~"] + [encode_graph6(g) for n in range(1, 7) for g in enumerate_graphs(n)]
        bad = [s for s in corpus if encode_graph6(parse_graph6(s)) != s]
        return corpus, bad
    (corpus, bad), secs = _timed(run)
    k3, k4 = parse_graph6("Bw"), parse_graph6("C~")
    ok = not bad and k3.is_complete() and k3.n == 3 and k4.is_complete() and k4.n == 4
    _record(8, "graph6 round trip", ok, secs, 5, f"{len(corpus)} strings, failures {bad}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
