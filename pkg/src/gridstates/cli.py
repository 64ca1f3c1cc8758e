"""Command-line entry point: ``gridstates <command> ...``.

Exit codes: 0 success, 2 parse or validation error, 3 a state was requested
from the empty graph.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog
from .census import CensusConfig, format_table, run_census
from .classify import classify
from .criteria import ccnr_entangled, degree_criterion
from .formats import export_dot, parse_graph, serialize_graph
from .graph import (
    Bipartition,
    EmptyGraphError,
    GridError,
    GridGraph,
    all_cuts,
    component_count,
    flatten,
    grid_rank,
    require_edges,
)
from .surgery import product_span_bound, surgery_terminals

EXIT_OK, EXIT_INVALID, EXIT_EMPTY = 0, 2, 3


def _read_graph(path: str) -> GridGraph:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise GridError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_graph(data)
    except GridError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def _cuts(G: GridGraph, text: str | None) -> list[Bipartition]:
    if text is None:
        return all_cuts(G.nparties)
    return [Bipartition.parse(text, G.nparties)]


def _parse_stitch(text: str | None) -> list:
    if not text:
        return []
    try:
        raw = json.loads(text)
        return [(tuple(u), tuple(v)) for u, v in raw]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise GridError(f"--stitch expects a JSON list of coordinate pairs, got {text!r}") from exc


def cmd_classify(args) -> int:
    G = _read_graph(args.file)
    report = classify(G, exhaustive=args.exhaustive)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.render())
    return EXIT_OK


def cmd_ppt(args) -> int:
    G = _read_graph(args.file)
    for cut in _cuts(G, args.cut):
        r = degree_criterion(G, cut)
        print(f"{cut}: PPT" if r.ppt else f"{cut}: NPT witness {r.witness_vertex}")
    return EXIT_OK


def cmd_surgery(args) -> int:
    G = _read_graph(args.file)
    stitch = _parse_stitch(args.stitch)
    for cut in _cuts(G, args.cut):
        F = flatten(G, cut)
        terminals, trace = surgery_terminals(F, exhaustive=args.exhaustive, stitch=stitch)
        print(f"cut {cut}: {F.dims[0]}x{F.dims[1]}, rank {grid_rank(F)}, {len(trace.nodes)} graphs explored")
        for T in terminals:
            edges = " ".join(f"{u}-{v}" for u, v in T.sorted_edges()) or "(empty)"
            print(f"  terminal rank {grid_rank(T)}: {edges}")
        print(f"  span bound {product_span_bound(terminals)}")
        if args.trace:
            print(trace.render())
    return EXIT_OK


def cmd_rank(args) -> int:
    G = _read_graph(args.file)
    print(f"rank {grid_rank(G)}, components {component_count(G)}")
    return EXIT_OK


def cmd_ccnr(args) -> int:
    G = _read_graph(args.file)
    require_edges(G)
    for cut in _cuts(G, args.cut):
        value, fired = ccnr_entangled(G, cut)
        print(f"{cut}: {value:.12f}{' entangled' if fired else ''}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.name not in catalog.NAMED:
        raise GridError(f"unknown graph {args.name!r}; choose from {', '.join(sorted(catalog.NAMED))}")
    try:
        params = [int(p) for p in args.params]
    except ValueError as exc:
        raise GridError(f"graph parameters must be integers, got {args.params}") from exc
    try:
        entry = catalog.NAMED[args.name](*params)
    except TypeError as exc:
        raise GridError(f"bad parameters for {args.name}: {exc}") from exc
    data = serialize_graph(entry.graph)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def _dims_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(d) for d in text.lower().split("x"))
    except ValueError as exc:
        raise GridError(f"--dims expects MxN, got {text!r}") from exc


def cmd_census(args) -> int:
    cfg = CensusConfig(_dims_arg(args.dims), args.max_edges, args.jobs)
    print(format_table(run_census(cfg)))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(_read_graph(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridstates", description="Entanglement tests for grid states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", nargs="?", default="-", help="graph JSON file, '-' for stdin (default)")
        return p

    p = with_file("classify", "run every criterion and print a label")
    p.add_argument("--json", action="store_true", help="single-line JSON report")
    p.add_argument("--exhaustive", action="store_true", help="best branch vertex at every surgery step")
    p.set_defaults(func=cmd_classify)

    p = with_file("ppt", "degree criterion per cut")
    p.add_argument("--cut", help="e.g. '0|1,2'; default all cuts")
    p.set_defaults(func=cmd_ppt)

    p = with_file("surgery", "row/column surgery terminals and span bound")
    p.add_argument("--cut")
    p.add_argument("--trace", action="store_true", help="print the explored tree")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--stitch", help="JSON list of preferred stitch edges, e.g. '[[[0,4],[3,1]]]'")
    p.set_defaults(func=cmd_surgery)

    p = with_file("rank", "grid rank and component count")
    p.set_defaults(func=cmd_rank)

    p = with_file("ccnr", "realignment trace norm per cut")
    p.add_argument("--cut")
    p.set_defaults(func=cmd_ccnr)

    p = sub.add_parser("gen", help="write a catalog graph as JSON")
    p.add_argument("name", help=", ".join(sorted(catalog.NAMED)))
    p.add_argument("params", nargs="*", help="size parameters, e.g. 'cross-hatch 4 5'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", help="classify every graph up to a number of edges")
    p.add_argument("--dims", required=True, help="MxN")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = with_file("export-dot", "Graphviz DOT with fixed grid positions")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except GridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
