"""Exhaustive verification of the minimum-edge bounds over all small graphs."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import ENUM_CAP, CapExceeded, canonical_labeling, enumerate_graphs
from .cocritical import bound_min_edges, is_p3k_cocritical, ramsey_p3_formula
from .criticality import is_saturated_class1
from .graph import SimpleGraph
from .graph6 import encode_graph6, parse_graph6

MODES = ("lower", "song")
STABLE_KEYS = (
    "mode", "n", "d", "graphs_scanned", "accepted_count", "min_edges", "bound_value",
    "bound_holds", "sharp", "witnesses", "notes", "provenance", "error",
)
CHUNK = 128


@dataclass
class VerificationReport:
    mode: str
    n: int
    d: int
    graphs_scanned: int = 0
    accepted_count: int = 0
    min_edges: int | None = None
    bound_value: int = 0
    bound_holds: bool = True
    sharp: bool = False
    witnesses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    provenance: str = "enumeration"
    error: str | None = None
    elapsed_ms: float = 0.0

    def stable_dict(self) -> dict:
        return {k: getattr(self, k) for k in STABLE_KEYS}


def default_jobs() -> int:
    env = os.environ.get("ECX_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def accepts(mode: str, g: SimpleGraph, d: int) -> bool:
    if mode == "lower":
        # chi' >= max degree, so max degree > k already rules out a k-coloring
        if g.is_complete() or g.max_degree > d:
            return False
        return is_p3k_cocritical(g, d).is_cocritical
    if mode == "song":
        return g.max_degree == d and is_saturated_class1(g)
    raise ValueError(f"unknown mode {mode!r}")


def _scan_chunk(args: tuple[str, int, Sequence[str]]) -> list[tuple[int, str, bool]]:
    mode, d, codes = args
    out = []
    for code in codes:
        g = parse_graph6(code)
        if accepts(mode, g, d):
            out.append((g.edge_count(), code, g.is_complete()))
    return out


def _graph_source(n: int, graphs: Iterable[SimpleGraph] | None) -> Iterable[SimpleGraph]:
    if graphs is not None:
        return graphs
    if not 1 <= n <= ENUM_CAP:
        raise CapExceeded(f"n={n} exceeds the built-in enumerator (1..{ENUM_CAP}); supply a graph6 stream")
    return enumerate_graphs(n)


def _verify(mode: str, n: int, d: int, graphs: Iterable[SimpleGraph] | None,
            provenance: str, jobs: int | None) -> VerificationReport:
    if mode == "lower" and d < 1:
        raise ValueError(f"k must be positive, got {d}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    started = time.perf_counter()
    report = VerificationReport(mode, n, d, bound_value=bound_min_edges(n, d).value, provenance=provenance)
    codes = []
    for g in _graph_source(n, graphs):
        if g.n != n:
            raise ValueError(f"stream graph has {g.n} vertices, expected {n}")
        codes.append(encode_graph6(g))
    report.graphs_scanned = len(codes)
    chunks = [(mode, d, codes[i:i + CHUNK]) for i in range(0, len(codes), CHUNK)]
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(chunks) <= 1:
        results = map(_scan_chunk, chunks)
        hits = [h for part in results for h in part]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for part in pool.map(_scan_chunk, chunks) for h in part]

    report.accepted_count = len(hits)
    if hits:
        report.min_edges = min(e for e, _, _ in hits)
        at_min = {}
        for e, code, _ in hits:
            if e == report.min_edges:
                g = parse_graph6(code)
                form, perm = canonical_labeling(g)
                at_min[form] = encode_graph6(g.relabel(perm))
        report.witnesses = [at_min[form] for form in sorted(at_min)]
        if any(complete for _, _, complete in hits):
            report.notes.append("complete graph accepted")
    else:
        report.notes.append("no instances")
    report.bound_holds = report.min_edges is None or report.min_edges >= report.bound_value
    report.sharp = report.min_edges is not None and report.min_edges == report.bound_value
    report.notes.extend(_range_notes(mode, n, d))
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report


def _range_notes(mode: str, n: int, d: int) -> list[str]:
    notes = []
    if mode == "lower":
        if n < ramsey_p3_formula(d):
            notes.append("n below r(P3;k)")
        elif d % 2 == 0 and n == d + 1:
            notes.append("n = k+1 with k even")
        if n < (3 * d + 1) // 2 + 2:
            notes.append("sharpness not established for this n")
    else:
        if n < (3 * d + 1) // 2:
            notes.append("sharpness not established for this n")
    return notes


def verify_lower(n: int, k: int, graphs: Iterable[SimpleGraph] | None = None,
                 provenance: str = "enumeration", jobs: int | None = None) -> VerificationReport:
    """Scan every class on ``n`` vertices for (P3;k)-co-critical graphs and compare with the bound."""
    return _verify("lower", n, k, graphs, provenance, jobs)


def verify_song(n: int, delta: int, graphs: Iterable[SimpleGraph] | None = None,
                provenance: str = "enumeration", jobs: int | None = None) -> VerificationReport:
    """Scan for saturated class-1 graphs of maximum degree ``delta`` and compare with the bound."""
    return _verify("song", n, delta, graphs, provenance, jobs)


def accepted_graphs(mode: str, n: int, d: int, graphs: Iterable[SimpleGraph] | None = None) -> list[SimpleGraph]:
    return [g for g in _graph_source(n, graphs) if accepts(mode, g, d)]


def sweep(n_range: Iterable[int], d_range: Iterable[int], mode: str,
          jobs: int | None = None) -> list[VerificationReport]:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    reports = []
    d_values = list(d_range)
    for n in sorted(n_range):
        for d in sorted(d_values):
            try:
                reports.append(_verify(mode, n, d, None, "enumeration", jobs))
            except (ValueError, ArithmeticError) as exc:
                failed = VerificationReport(mode, n, d, bound_holds=False, error=str(exc))
                try:
                    failed.bound_value = bound_min_edges(n, d).value
                except ValueError:
                    pass
                reports.append(failed)
    return reports


def emit_report(reports: Sequence[VerificationReport], fmt: str, timing: bool = False) -> bytes:
    """Serialize reports sorted by (mode, n, d).

    Everything except timing is reproducible; with ``timing`` the elapsed
    milliseconds go in a trailing ``metadata`` object (JSON) or column (CSV).
    """
    ordered = sorted(reports, key=lambda r: (r.mode, r.n, r.d))
    if fmt == "json":
        docs = []
        for r in ordered:
            doc = r.stable_dict()
            if timing:
                doc["metadata"] = {"elapsed_ms": round(r.elapsed_ms, 3)}
            docs.append(doc)
        return (json.dumps(docs, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(STABLE_KEYS) + (["elapsed_ms"] if timing else []))
        for r in ordered:
            row = []
            for key in STABLE_KEYS:
                value = getattr(r, key)
                if isinstance(value, list):
                    value = ";".join(value)
                elif value is None:
                    value = ""
                elif isinstance(value, bool):
                    value = str(value).lower()
                row.append(value)
            if timing:
                row.append(round(r.elapsed_ms, 3))
            writer.writerow(row)
        return buf.getvalue().encode()
    raise ValueError(f"unknown report format {fmt!r}")


def stable_section(payload: bytes) -> bytes:
    """Strip timing metadata from a JSON report document."""
    docs = json.loads(payload)
    for doc in docs:
        doc.pop("metadata", None)
    return (json.dumps(docs, indent=2) + "\n").encode()
