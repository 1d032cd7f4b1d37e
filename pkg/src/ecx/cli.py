"""Command-line entry point: ``ecx <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterator, Sequence, TextIO

from . import graph as G
from .canon import CapExceeded, enumerate_graphs
from .cocritical import (
    bound_min_edges,
    certify_extremal,
    construct_extremal,
    is_p3k_cocritical,
    one_factorization,
    ramsey_p3_bruteforce,
    ramsey_p3_formula,
    RAMSEY_CAP,
)
from .coloring import chromatic_index_exact, optimal_coloring
from .criticality import (
    NotApplicable,
    classify,
    is_critical_edge,
    is_delta_critical,
    is_saturated_class1,
    val_check,
)
from .graph6 import Graph6Error, encode_graph6, parse_graph6, read_graph6
from .harness import default_jobs, emit_report, verify_lower, verify_song

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")


# -- input helpers -------------------------------------------------------------


def _open_text(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, encoding="ascii")


def _family(text: str) -> G.SimpleGraph:
    name, _, params = text.partition(":")
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise UsageError("--family", f"bad parameters in {text!r}") from None
    makers: dict[str, tuple[int, Callable[..., G.SimpleGraph]]] = {
        "complete": (1, G.complete_graph),
        "cycle": (1, G.cycle),
        "empty": (1, G.empty_graph),
        "path": (1, G.path),
        "star": (1, G.star),
        "petersen": (0, G.petersen),
        "extremal": (2, construct_extremal),
    }
    if name not in makers:
        raise UsageError("--family", f"unknown family {name!r} (choose from {', '.join(makers)})")
    arity, make = makers[name]
    if len(args) != arity:
        raise UsageError("--family", f"{name} takes {arity} integer parameter(s)")
    try:
        return make(*args)
    except ValueError as exc:
        raise UsageError("--family", str(exc)) from None


def _load_graph(args: argparse.Namespace) -> G.SimpleGraph:
    if args.graph is not None:
        try:
            return parse_graph6(args.graph)
        except (Graph6Error, G.GraphError) as exc:
            raise UsageError("--graph", str(exc)) from None
    if args.file is not None:
        try:
            with _open_text(args.file) as fh:
                for g in read_graph6(fh):
                    return g
        except OSError as exc:
            raise UsageError("--file", str(exc)) from None
        except (Graph6Error, G.GraphError) as exc:
            raise UsageError("--file", str(exc)) from None
        raise UsageError("--file", "no graph found")
    if args.family is not None:
        return _family(args.family)
    raise UsageError("--graph", "one of --graph, --file or --family is required")


def _edge(text: str) -> tuple[int, int]:
    try:
        u, v = (int(p) for p in text.replace("-", ",").split(","))
    except ValueError:
        raise UsageError("--edge", f"expected u,v, got {text!r}") from None
    return u, v


def _range(flag: str, text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise UsageError(flag, f"expected a or a:b, got {text!r}") from None


def _emit(args: argparse.Namespace, human: str, payload: dict, truth: bool | None = None) -> int:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)
    if truth is False and args.strict:
        return EXIT_FALSE
    return EXIT_OK


# -- subcommands ---------------------------------------------------------------


def cmd_chi(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if args.emit_coloring:
        col = optimal_coloring(g)
        chi = col.t
        if args.json:
            print(json.dumps({"chi": chi, "coloring": [list(map(int, s.split())) for s in col.to_lines()]}, indent=2))
        else:
            print(chi)
            for line in col.to_lines():
                print(line)
        return EXIT_OK
    chi = chromatic_index_exact(g)
    return _emit(args, str(chi), {"chi": chi})


def cmd_classify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    label = classify(g)
    return _emit(args, f"{label.label.value} (chi'={label.chi}, max degree={label.delta})",
                 {"class": label.label.value, "chi": label.chi, "max_degree": label.delta})


def cmd_critical_edge(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    u, v = _edge(args.edge)
    result = is_critical_edge(g, u, v)
    return _emit(args, str(result).lower(), {"edge": [u, v], "critical": result}, result)


def cmd_delta_critical(args: argparse.Namespace) -> int:
    result = is_delta_critical(_load_graph(args))
    return _emit(args, str(result).lower(), {"delta_critical": result}, result)


def cmd_val(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    x, y = _edge(args.edge)
    reports = val_check(g, x, y)
    lines = [f"x={r.x} y={r.y} required={r.required} found={r.found} holds={str(r.holds).lower()}" for r in reports]
    payload = {"orientations": [
        {"x": r.x, "y": r.y, "required": r.required, "found": r.found, "holds": r.holds} for r in reports]}
    return _emit(args, "\n".join(lines), payload, all(r.holds for r in reports))


def cmd_saturated(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result = is_saturated_class1(g)
    payload = {"saturated_class1": result, "complete": g.is_complete()}
    return _emit(args, str(result).lower(), payload, result)


def cmd_cocritical(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rep = is_p3k_cocritical(g, args.k)
    payload = {"k": rep.k, "cocritical": rep.is_cocritical, "chi": rep.chi, "max_degree": rep.max_degree,
               "failing_edge": list(rep.failing_edge) if rep.failing_edge else None}
    human = str(rep.is_cocritical).lower()
    if not rep.is_cocritical:
        human += f" (chi'={rep.chi}" + (f", failing edge {rep.failing_edge[0]},{rep.failing_edge[1]})"
                                       if rep.failing_edge else ")")
    return _emit(args, human, payload, rep.is_cocritical)


def cmd_bound(args: argparse.Namespace) -> int:
    d = args.k if args.k is not None else args.delta
    if d is None:
        raise UsageError("--k", "one of --k or --delta is required")
    p = bound_min_edges(args.n, d)
    return _emit(args, f"{p.value} (epsilon={p.epsilon})",
                 {"n": p.n, "d": p.d, "epsilon": p.epsilon, "value": p.value})


def cmd_ramsey(args: argparse.Namespace) -> int:
    formula = ramsey_p3_formula(args.k)
    brute = ramsey_p3_bruteforce(args.k) if args.k <= RAMSEY_CAP else None
    human = str(formula) if brute is None else f"{formula} (brute force {brute})"
    agree = brute is None or brute == formula
    return _emit(args, human, {"k": args.k, "formula": formula, "bruteforce": brute}, agree)


def cmd_construct(args: argparse.Namespace) -> int:
    if args.certify:
        cert = certify_extremal(args.n, args.k)
        code = encode_graph6(cert.graph)
        payload = {"graph6": code, "edges": cert.graph.edge_count(), "bound": cert.bound.value,
                   "method": cert.method, "cocritical": cert.cocritical}
        human = f"{code}\nedges={payload['edges']} bound={cert.bound.value} method={cert.method} " \
                f"cocritical={str(cert.cocritical).lower()}"
        return _emit(args, human, payload, cert.cocritical and cert.meets_bound)
    g = construct_extremal(args.n, args.k)
    code = encode_graph6(g)
    return _emit(args, code, {"graph6": code, "edges": g.edge_count()})


def cmd_factorize(args: argparse.Namespace) -> int:
    rounds = one_factorization(args.m)
    human = "\n".join(" ".join(f"{a}-{b}" for a, b in m) for m in rounds)
    return _emit(args, human, {"m": args.m, "matchings": [[list(e) for e in m] for m in rounds]})


def cmd_enumerate(args: argparse.Namespace) -> int:
    codes = [encode_graph6(g) for g in enumerate_graphs(args.n)]
    return _emit(args, "\n".join(codes), {"n": args.n, "count": len(codes), "graphs": codes})


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n is None:
        raise UsageError("--n", "a vertex count or range a:b is required")
    n_values = _range("--n", args.n)
    d_text = args.k if args.k is not None else args.delta
    if d_text is None:
        raise UsageError("--k" if args.mode == "lower" else "--delta", "a parameter value or range a:b is required")
    d_values = _range("--k" if args.k is not None else "--delta", d_text)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs", "must be at least 1")
    run = verify_lower if args.mode == "lower" else verify_song

    stream = None
    provenance = "enumeration"
    if args.file is not None:
        if len(n_values) != 1:
            raise UsageError("--file", "a graph6 stream needs a single --n")
        try:
            with _open_text(args.file) as fh:
                stream = list(read_graph6(fh))
        except OSError as exc:
            raise UsageError("--file", str(exc)) from None
        except (Graph6Error, G.GraphError) as exc:
            raise UsageError("--file", str(exc)) from None
        provenance = f"graph6:{args.file}"

    reports = []
    for n in n_values:
        for d in d_values:
            try:
                reports.append(run(n, d, graphs=stream, provenance=provenance, jobs=jobs))
            except CapExceeded as exc:
                raise UsageError("--n", str(exc)) from None
    fmt = "json" if args.json else "csv" if args.csv else None
    if fmt:
        sys.stdout.write(emit_report(reports, fmt, timing=args.timing).decode())
    else:
        for r in sorted(reports, key=lambda r: (r.mode, r.n, r.d)):
            status = "holds" if r.bound_holds else "FAILS"
            sharp = " sharp" if r.sharp else ""
            notes = f" [{'; '.join(r.notes)}]" if r.notes else ""
            print(f"{r.mode} n={r.n} d={r.d}: scanned={r.graphs_scanned} accepted={r.accepted_count} "
                  f"min_edges={r.min_edges} bound={r.bound_value} {status}{sharp}{notes}")
    ok = all(r.bound_holds for r in reports)
    return EXIT_FALSE if (args.strict and not ok) else EXIT_OK


def _edge_list_blocks(fh: TextIO) -> Iterator[G.SimpleGraph]:
    block: list[str] = []
    for raw in list(fh) + [""]:
        line = raw.strip()
        if line:
            block.append(line)
            continue
        if block:
            try:
                n, m = (int(x) for x in block[0].split())
                edges = [tuple(int(x) for x in row.split()) for row in block[1:]]
            except ValueError:
                raise UsageError("--file", f"malformed edge-list block starting {block[0]!r}") from None
            if len(edges) != m:
                raise UsageError("--file", f"header declares {m} edges, found {len(edges)}")
            yield G.SimpleGraph.from_edges(n, edges)
            block = []


def cmd_encode(args: argparse.Namespace) -> int:
    if args.family is not None:
        graphs = [_family(args.family)]
    elif args.file is not None:
        try:
            with _open_text(args.file) as fh:
                graphs = list(_edge_list_blocks(fh))
        except OSError as exc:
            raise UsageError("--file", str(exc)) from None
        except G.GraphError as exc:
            raise UsageError("--file", str(exc)) from None
    else:
        raise UsageError("--file", "an edge-list file or --family is required")
    for g in graphs:
        print(encode_graph6(g))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    if args.graph is not None:
        graphs = [_load_graph(args)]
    elif args.file is not None:
        try:
            with _open_text(args.file) as fh:
                graphs = list(read_graph6(fh))
        except OSError as exc:
            raise UsageError("--file", str(exc)) from None
        except (Graph6Error, G.GraphError) as exc:
            raise UsageError("--file", str(exc)) from None
    else:
        raise UsageError("--graph", "a graph6 string or --file is required")
    blocks = []
    for g in graphs:
        edges = g.edges()
        blocks.append("\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]))
    print("\n\n".join(blocks))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecx", description="Edge-coloring criticality toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name: str, func: Callable, helptext: str, graph_input: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--strict", action="store_true", help="exit 1 when the answer is false")
        if graph_input:
            p.add_argument("--graph", help="graph6 string")
            p.add_argument("--file", help="graph6 file (first graph is used), '-' for stdin")
            p.add_argument("--family", help="complete:N, cycle:N, empty:N, path:N, star:K, petersen, extremal:N,K")
        return p

    p = add("chi", cmd_chi, "exact chromatic index", True)
    p.add_argument("--emit-coloring", action="store_true", help="print an optimal coloring as 'u v color' lines")
    add("classify", cmd_classify, "class 1 or class 2", True)
    p = add("critical-edge", cmd_critical_edge, "is the edge critical", True)
    p.add_argument("--edge", required=True, help="u,v")
    add("delta-critical", cmd_delta_critical, "connected, class 2, every edge critical", True)
    p = add("val", cmd_val, "adjacency-lemma counts at a critical edge", True)
    p.add_argument("--edge", required=True, help="x,y")
    add("saturated", cmd_saturated, "class 1 and every added edge raises chi'", True)
    p = add("cocritical", cmd_cocritical, "(P3;k)-co-criticality", True)
    p.add_argument("--k", type=int, required=True)
    p = add("bound", cmd_bound, "minimum-edge bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--delta", type=int)
    p = add("ramsey", cmd_ramsey, "r(P3;k) by formula and brute force")
    p.add_argument("--k", type=int, required=True)
    p = add("construct", cmd_construct, "extremal co-critical graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certify", action="store_true", help="also check co-criticality and the edge count")
    p = add("factorize", cmd_factorize, "round-robin 1-factorization of K_m")
    p.add_argument("--m", type=int, required=True)
    p = add("enumerate", cmd_enumerate, "all graphs on n vertices up to isomorphism (graph6)")
    p.add_argument("--n", type=int, required=True)
    p = add("verify", cmd_verify, "exhaustive bound verification")
    p.add_argument("mode", choices=["lower", "song"])
    p.add_argument("--n", help="n or a:b")
    p.add_argument("--k", help="k or a:b (lower mode)")
    p.add_argument("--delta", help="max degree or a:b (song mode)")
    p.add_argument("--file", help="graph6 stream to scan instead of the built-in enumeration")
    p.add_argument("--jobs", type=int, help="worker processes (default: $ECX_JOBS or CPU count)")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.add_argument("--timing", action="store_true", help="include elapsed time")
    p = add("encode", cmd_encode, "edge-list blocks to graph6")
    p.add_argument("--file", help="edge-list file ('n m' header then 'u v' lines; blank-line separated)")
    p.add_argument("--family")
    p = add("decode", cmd_decode, "graph6 to edge-list blocks")
    p.add_argument("--graph")
    p.add_argument("--file")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ecx {args.command}: error: {exc}", file=sys.stderr)
    except NotApplicable as exc:
        print(f"ecx {args.command}: error: not applicable: {exc}", file=sys.stderr)
    except (G.GraphError, CapExceeded, ValueError) as exc:
        print(f"ecx {args.command}: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
