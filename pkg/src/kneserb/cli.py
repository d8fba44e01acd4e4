"""Command line front end.

Exit codes: 0 success, 1 semantic failure (not a b-coloring), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combinatorics import to_elements
from .construction import build
from .jsonl import ColoringFormatError, dump_coloring, load_coloring
from .kneser import KneserParams
from .solver import DEFAULT_VERTEX_CAP, SearchRefused, bounds, exact_b_chromatic
from .verify import DEFAULT_MAX_WITNESSES, is_b_coloring

THREADS_ENV = "KNESERB_THREADS"
DOT_VERTEX_CAP = 64


class InputError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _params(args) -> KneserParams:
    try:
        return KneserParams(args.m, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"{THREADS_ENV}={env!r} is not an integer") from None
    return os.cpu_count() or 1


def cmd_color(args) -> int:
    p = _params(args)
    try:
        c = build(p, workers=_threads(args))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.output in (None, "-"):
        dump_coloring(c, sys.stdout)
    else:
        with open(args.output, "w") as fp:
            dump_coloring(c, fp)
    return 0


def cmd_verify(args) -> int:
    try:
        if args.input == "-":
            c = load_coloring(sys.stdin)
        else:
            with open(args.input) as fp:
                c = load_coloring(fp)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except ColoringFormatError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    max_witnesses = None if args.max_witnesses == 0 else args.max_witnesses
    report = is_b_coloring(c, max_witnesses=max_witnesses, workers=_threads(args))
    _emit(report.to_json())
    if not report.proper:
        a, b = report.counterexample
        print(f"not proper: {to_elements(a)} and {to_elements(b)} are disjoint but share a color", file=sys.stderr)
    elif not report.is_b:
        print(f"not a b-coloring: {len(report.classes_without_witness)} classes lack a dominating vertex", file=sys.stderr)
    return 0 if report.is_b else 1


def cmd_bounds(args) -> int:
    lower, upper = bounds(_params(args))
    _emit({"lower": lower, "upper": upper})
    return 0


def cmd_brute(args) -> int:
    p = _params(args)
    try:
        result = exact_b_chromatic(p, max_nodes=args.budget_nodes, time_limit=args.budget, vertex_cap=args.vertex_cap)
    except SearchRefused as exc:
        raise InputError(str(exc)) from None
    lower, upper = bounds(p)
    out = {"lower": lower, "upper": upper}
    out.update(result.to_json())
    _emit(out)
    return 0


def dot_lines(p: KneserParams):
    def name(v):
        return '"' + ",".join(map(str, to_elements(v))) + '"'

    verts = list(p.vertices())
    yield f'graph "KG({p.m},{p.n})" {{'
    for v in verts:
        yield f"  {name(v)};"
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if a & b == 0:
                yield f"  {name(a)} -- {name(b)};"
    yield "}"


def cmd_export_dot(args) -> int:
    p = _params(args)
    if p.num_vertices > DOT_VERTEX_CAP:
        raise InputError(f"{p} has {p.num_vertices} vertices; DOT export is limited to {DOT_VERTEX_CAP}")
    for line in dot_lines(p):
        print(line)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneserb", description="b-colorings of Kneser graphs KG(m, n)")
    parser.add_argument("--threads", type=int, default=None, help=f"worker count (default: ${THREADS_ENV} or all cores)")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_mn(p):
        p.add_argument("m", type=int, help="ground set size")
        p.add_argument("n", type=int, help="subset size")
        return p

    color = with_mn(sub.add_parser("color", help="write the b-coloring as JSON lines"))
    color.add_argument("-o", "--output", help="output path (default: stdout)")
    color.set_defaults(func=cmd_color)

    verify = sub.add_parser("verify", help="check a JSON-lines coloring file")
    verify.add_argument("input", help="coloring file, or - for stdin")
    verify.add_argument(
        "--max-witnesses", type=int, default=DEFAULT_MAX_WITNESSES, help="witnesses listed per class, 0 for all"
    )
    verify.set_defaults(func=cmd_verify)

    with_mn(sub.add_parser("bounds", help="certified lower and upper bounds")).set_defaults(func=cmd_bounds)

    brute = with_mn(sub.add_parser("brute", help="exact value by exhaustive search"))
    brute.add_argument("--budget", type=float, default=300.0, help="wall-clock limit in seconds")
    brute.add_argument("--budget-nodes", type=int, default=None, help="search node limit")
    brute.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    brute.set_defaults(func=cmd_brute)

    dot = with_mn(sub.add_parser("export-dot", help=f"DOT edge list (at most {DOT_VERTEX_CAP} vertices)"))
    dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"kneserb {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
