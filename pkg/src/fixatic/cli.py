"""Command-line front end.

    fixatic bounds --graph6 'Dhc'
    fixatic gen spider_dan1 2 --graph6 | fixatic bounds --file -
    fixatic verify --max-n 5 --table
"""

from __future__ import annotations

import argparse
import json
import sys

from . import claims
from .autom import automorphism_group
from .families import FAMILIES, generate
from .fixing import fixing_number
from .graph import Graph, GraphFormatError, encode_graph6, is_connected, parse_graph, parse_graph6, to_edge_list
from .locating import DisconnectedGraphError, locatic_number, location_number
from .partition import COUNT_CAP, count_fixatic_partitions, fixatic_number, fixatic_upper_bound

GRAPH_COMMANDS = ("fix", "fixatic", "count", "loc", "locatic", "bounds")


class UsageError(Exception):
    pass


def _read_graph(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.file is not None:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file) as fh:
                text = fh.read()
        return parse_graph(text)
    raise UsageError("give the graph with --graph6 STR or --file PATH")


def _graph_header(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "graph6": encode_graph6(g)}


def _invariants(cmd: str, g: Graph, force_count: bool) -> dict:
    out: dict = {"graph": _graph_header(g)}
    can_count = g.n <= COUNT_CAP or force_count
    if cmd in ("fix", "bounds"):
        out["aut_order"] = automorphism_group(g).order
    if cmd in ("fix", "fixatic", "bounds"):
        w = fixing_number(g)
        out["fix"] = w.size
        out["fix_witness"] = list(w.witness)
    if cmd in ("fixatic", "count", "bounds"):
        r = fixatic_number(g)
        out["fxt"] = r.fxt
        if cmd != "count":
            out["fxt_witness"] = [list(c) for c in r.witness.classes]
    if cmd == "bounds":
        out["fxt_upper_bound"] = fixatic_upper_bound(g)
    if cmd == "count" and not can_count:
        raise UsageError(f"n = {g.n} > {COUNT_CAP}; pass --force-count to enumerate anyway")
    if cmd in ("fixatic", "count") and can_count:
        out["pi_t"] = count_fixatic_partitions(g, cap=max(g.n, COUNT_CAP))
    if cmd in ("loc", "locatic", "bounds"):
        if not is_connected(g):
            if cmd != "bounds":
                raise DisconnectedGraphError("location numbers need a connected graph")
        else:
            if cmd in ("loc", "bounds"):
                out["loc"] = location_number(g)
            if cmd in ("locatic", "bounds") and (g.n <= COUNT_CAP or force_count):
                out["locatic"] = locatic_number(g, cap=max(g.n, COUNT_CAP))
    return out


def _table(obj: dict) -> str:
    flat = []
    for key, value in obj.items():
        if key == "graph":
            flat.extend((f"graph.{k}", v) for k, v in value.items())
        else:
            flat.append((key, value))
    width = max(len(k) for k, _ in flat)
    return "\n".join(f"{k.ljust(width)}  {json.dumps(v) if not isinstance(v, str) else v}"
                     for k, v in flat)


def _report_table(reports) -> str:
    rows = [("claim", "tested", "verdict", "counterexamples")]
    for r in reports:
        verdict = r.verdict + ("(expected)" if r.expected_fail else "")
        rows.append((r.claim, str(r.tested), verdict, str(len(r.counterexamples))))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixatic",
                                     description="Fixing numbers, fixatic numbers and related invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd in GRAPH_COMMANDS:
        p = sub.add_parser(cmd)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph6", metavar="STR")
        src.add_argument("--file", metavar="PATH", help="edge list or graph6 file; '-' for stdin")
        p.add_argument("--table", action="store_true")
        p.add_argument("--force-count", action="store_true",
                       help=f"enumerate partitions even when n > {COUNT_CAP}")

    p = sub.add_parser("gen", help="emit a family graph; families: " + ", ".join(FAMILIES))
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--graph6", dest="fmt", action="store_const", const="graph6")
    fmt.add_argument("--edges", dest="fmt", action="store_const", const="edges")

    p = sub.add_parser("verify")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--table", action="store_true")

    p = sub.add_parser("scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--claim", required=True, choices=sorted(claims.CLAIMS))
    p.add_argument("--table", action="store_true")
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command in GRAPH_COMMANDS:
            g = _read_graph(args)
            out = _invariants(args.command, g, args.force_count)
            print(_table(out) if args.table else _dump(out), file=stdout)
            return 0
        if args.command == "gen":
            g = generate(args.family, args.params)
            text = to_edge_list(g).rstrip("\n") if args.fmt == "edges" else encode_graph6(g)
            print(text, file=stdout)
            return 0
        if args.command == "verify":
            if not 2 <= args.max_n <= 6:
                raise UsageError("--max-n must lie in 2..6")
            reports = claims.verify_paper(args.max_n)
        else:
            if not 1 <= args.n <= claims.SCAN_MAX_N:
                raise UsageError(f"--n must lie in 1..{claims.SCAN_MAX_N}")
            reports = [claims.run_claim(args.claim, claims.scan_connected_graphs(args.n))]
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"fixatic: error: {exc}", file=sys.stderr)
        return 2

    if args.table:
        print(_report_table(reports), file=stdout)
    else:
        print(_dump([r.to_json() for r in reports]), file=stdout)
    return 0 if claims.harness_ok(reports) else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
