"""Command-line entry point: ``gallai <subcommand> ...``.

Exit codes: 0 success (all answers true / no mismatches), 1 some answer
false or some mismatch, 2 usage, input or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from collections.abc import Iterator, Sequence
from typing import TextIO

from .formats import ParseError, parse_edge_list, parse_graph6, to_dot, to_graph6
from .graph import Graph, GraphError
from .harness import QUESTIONS, HarnessError, crosscheck
from .operators import anti_gallai, apex_embedding, gallai, line_graph
from .patterns import CATALOG
from .recognition import RecognitionError, Route, gallai_forest_direct, is_gallai_forest, is_gallai_tree

OPERATORS = {"gallai": gallai, "anti-gallai": anti_gallai, "line": line_graph}
ROUTES = [r.value for r in Route] + ["all"]


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with its own usage dump
        raise CliError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gallai", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
        p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6", dest="in_format",
                       help="input format; edge lists are separated by blank lines")

    p = sub.add_parser("transform", help="build a derived graph for each input graph")
    p.add_argument("operator", choices=sorted(OPERATORS))
    add_input(p)
    p.add_argument("--output", choices=["graph6", "dot", "json"], default="graph6")

    p = sub.add_parser("recognize", help="decide whether the Gallai graph is a forest or a tree")
    p.add_argument("question", choices=["forest", "tree"])
    add_input(p)
    p.add_argument("--route", choices=ROUTES, default=Route.CHARACTERIZATION.value)

    p = sub.add_parser("embed", help="apex embedding of each input graph into a Gallai graph")
    add_input(p)
    p.add_argument("--output", choices=["graph6", "json"], default="json")

    p = sub.add_parser("crosscheck", help="exhaustive oracle-equivalence sweep")
    p.add_argument("check", choices=list(QUESTIONS))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--dedup", action="store_true", default=None,
                   help="one graph per isomorphism class instead of all labelled graphs")
    p.add_argument("--workers", type=int, default=1)

    sub.add_parser("patterns", help="print the pattern catalog as graph6 and edge lists")
    return parser


def read_graphs(path: str, fmt: str, stdin: TextIO) -> Iterator[Graph]:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise CliError(f"{path} is not ASCII text") from exc
    if fmt == "graph6":
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line.strip())
            except ParseError as exc:
                raise CliError(f"line {lineno}: {exc}") from exc
    else:
        for chunk in text.split("\n\n"):
            if chunk.strip():
                yield parse_edge_list(chunk)


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _transform(args: argparse.Namespace, graphs: Iterator[Graph], out: TextIO) -> int:
    op = OPERATORS[args.operator]
    for g in graphs:
        lg = op(g)
        if args.output == "graph6":
            out.write(to_graph6(lg.graph) + "\n")
        elif args.output == "dot":
            # DOT is multi-line; a blank line separates graphs
            out.write(to_dot(lg.graph, lg.labels, name=args.operator.replace("-", "_")) + "\n\n")
        else:
            out.write(_dump({
                "input": to_graph6(g),
                "operator": args.operator,
                "graph": to_graph6(lg.graph),
                "labels": [list(e) for e in lg.labels],
            }) + "\n")
    return 0


def _recognize(args: argparse.Namespace, graphs: Iterator[Graph], out: TextIO) -> int:
    status = 0
    routes = [r.value for r in Route] if args.route == "all" else [args.route]
    for g in graphs:
        verdicts = []
        for route in routes:
            if args.question == "forest":
                if route == Route.CHARACTERIZATION.value:
                    v = replace(is_gallai_forest(g), route=route)
                elif route == Route.DIRECT.value:
                    v = gallai_forest_direct(g)
                else:
                    raise CliError("the structural route only answers the tree question")
            else:
                v = is_gallai_tree(g, route)
            verdicts.append(v)
            if not v.answer:
                status = 1
        if len(verdicts) == 1:
            out.write(verdicts[0].to_json(g) + "\n")
        else:
            out.write(_dump([v.to_dict(g) for v in verdicts]) + "\n")
    return status


def _embed(args: argparse.Namespace, graphs: Iterator[Graph], out: TextIO) -> int:
    for h in graphs:
        g, apex = apex_embedding(h)
        if args.output == "graph6":
            out.write(f"{to_graph6(g)} {apex}\n")
        else:
            out.write(_dump({"input": to_graph6(h), "graph": to_graph6(g), "apex": apex}) + "\n")
    return 0


def _crosscheck(args: argparse.Namespace, out: TextIO) -> int:
    report = crosscheck(args.check, args.n_max, dedup=args.dedup, workers=args.workers)
    out.write(report.to_jsonl())
    return 0 if report.ok else 1


def _patterns(out: TextIO) -> int:
    for name, g in CATALOG.items():
        edges = " ".join(e.label() for e in g.edges())
        out.write(f"{name}\t{to_graph6(g)}\t{edges}\n")
    return 0


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "crosscheck":
            return _crosscheck(args, stdout)
        if args.command == "patterns":
            return _patterns(stdout)
        graphs = read_graphs(args.input, args.in_format, stdin)
        if args.command == "transform":
            return _transform(args, graphs, stdout)
        if args.command == "recognize":
            return _recognize(args, graphs, stdout)
        return _embed(args, graphs, stdout)
    except (CliError, ParseError, GraphError, RecognitionError, HarnessError) as exc:
        stderr.write(f"gallai: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
