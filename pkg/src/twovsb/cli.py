"""Command-line interface.

Exit codes: 0 property holds / success, 1 property fails, 2 input error,
3 exact search stopped without a proof of optimality.
"""

from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path

from . import fixtures
from .approx import run_method
from .bench import bench, load_corpus, write_csv
from .connectivity import is_2vc_digraph, is_3vc_ugraph, is_biconnected, is_strongly_connected
from .dot import to_dot
from .errors import GraphError
from .exact import DEFAULT_MAX_M, DEFAULT_MAX_N, exact_m2vsbss
from .generators import random_2vsb
from .graph import Digraph, from_edge_list, to_edge_list, underlying
from .sparsify import DeletionOrder
from .strong import b_articulation_points, is_2vsb, is_strongly_biconnected, sbcc

PROPERTIES = {
    "sc": is_strongly_connected,
    "bicon": lambda g: is_biconnected(underlying(g)),
    "sb": is_strongly_biconnected,
    "2vc": is_2vc_digraph,
    "2vsb": is_2vsb,
    "3vc-underlying": lambda g: is_3vc_ugraph(underlying(g)),
}

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNPROVEN = 0, 1, 2, 3


class InputError(Exception):
    pass


def read_graph(source: str) -> Digraph:
    """Load an edge-list file, ``-`` for stdin, or a bundled fixture name."""
    if source == "-":
        text = sys.stdin.read()
    elif Path(source).is_file():
        text = Path(source).read_text()
    elif source in fixtures.FIXTURES:
        return fixtures.load(source)
    else:
        raise InputError(f"{source}: no such file or fixture")
    try:
        return from_edge_list(text)
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def cmd_check(args, out) -> int:
    holds = PROPERTIES[args.property](read_graph(args.file))
    out.write("true\n" if holds else "false\n")
    return EXIT_OK if holds else EXIT_FAIL


def cmd_sbcc(args, out) -> int:
    dec = sbcc(read_graph(args.file))
    out.write(f"# t={dec.t}\n")
    for comp in dec.components:
        out.write(" ".join(map(str, comp)) + "\n")
    return EXIT_OK


def cmd_bap(args, out) -> int:
    g = read_graph(args.file)
    if not is_strongly_biconnected(g):
        raise InputError("input graph is not strongly biconnected")
    report = b_articulation_points(g)
    out.write(f"# l={report.l}\n")
    for v in report.points:
        out.write(f"{v}\n")
    return EXIT_OK


def cmd_approx(args, out) -> int:
    g = read_graph(args.file)
    if not is_2vsb(g):
        raise InputError("input graph is not 2-vertex strongly biconnected")
    r = run_method(g, args.method, DeletionOrder.parse(args.order, args.seed))
    out.write(to_edge_list(r.arcs))
    print(
        f"n={r.n} m={r.m} l={r.l} result={r.size} bound={r.bound} lb={2 * r.n}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_exact(args, out) -> int:
    g = read_graph(args.file)
    if not is_2vsb(g):
        raise InputError("input graph is not 2-vertex strongly biconnected")
    res = exact_m2vsbss(g, args.max_n, args.max_m, args.time_limit_ms)
    out.write(f"# size={res.size} proven={str(res.proven_optimal).lower()}\n")
    out.write(to_edge_list(res.arcs))
    return EXIT_OK if res.proven_optimal else EXIT_UNPROVEN


def cmd_gen(args, out) -> int:
    if args.kind == "random2vsb":
        if args.n is None or args.n < 4:
            raise InputError("random2vsb needs --n >= 4")
        g = random_2vsb(args.n, args.extra_arcs, args.seed)
    elif args.kind in fixtures.FIXTURES:
        g = fixtures.load(args.kind)
    else:
        raise InputError(f"unknown generator {args.kind!r}")
    out.write(to_edge_list(g))
    return EXIT_OK


def cmd_bench(args, out) -> int:
    if not Path(args.directory).is_dir():
        raise InputError(f"{args.directory}: not a directory")
    rows = bench(
        load_corpus(args.directory),
        methods=_csv_list(args.methods),
        orders=_csv_list(args.orders),
        seeds=[int(s) for s in _csv_list(args.seeds)],
        with_exact=args.with_exact,
        max_n=args.max_n,
        max_m=args.max_m,
        time_limit_ms=args.time_limit_ms,
    )
    write_csv(rows, out)
    return EXIT_OK


def cmd_dot(args, out) -> int:
    g = read_graph(args.file)
    marked = read_graph(args.highlight).arcs if args.highlight else None
    out.write(to_dot(g, marked))
    return EXIT_OK


def _csv_list(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twovsb",
        description="2-vertex strongly biconnected digraphs: checks, decompositions, sparsification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph_arg=True):
        p = sub.add_parser(name, help=help_text)
        if graph_arg:
            p.add_argument("file", help="edge-list file, '-' for stdin, or a fixture name")
        p.add_argument("--out", help="write primary output here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "test a connectivity property")
    p.add_argument("--property", choices=sorted(PROPERTIES), default="2vsb")

    add("sbcc", cmd_sbcc, "list strongly biconnected components")
    add("bap", cmd_bap, "list b-articulation points")

    def order_flags(p):
        p.add_argument("--order", choices=("input", "lex", "random"), default="lex")
        p.add_argument("--seed", type=int, default=0)

    p = add("approx", cmd_approx, "approximate a minimum 2VSB spanning subgraph")
    p.add_argument("--method", choices=("alg1", "union"), default="alg1")
    order_flags(p)

    def limit_flags(p):
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument("--max-m", type=int, default=DEFAULT_MAX_M)
        p.add_argument("--time-limit-ms", type=float, default=None)

    p = add("exact", cmd_exact, "exact minimum 2VSB spanning subgraph (small graphs)")
    limit_flags(p)

    p = add("gen", cmd_gen, "emit a fixture or a random 2VSB graph", graph_arg=False)
    p.add_argument("kind", help="fixture name or 'random2vsb'")
    p.add_argument("--n", type=int)
    p.add_argument("--extra-arcs", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = add("bench", cmd_bench, "CSV benchmark over a directory of edge lists", graph_arg=False)
    p.add_argument("directory")
    p.add_argument("--methods", default="alg1,union")
    p.add_argument("--orders", default="lex")
    p.add_argument("--seeds", default="0")
    p.add_argument("--with-exact", action="store_true")
    limit_flags(p)

    p = add("dot", cmd_dot, "render as Graphviz DOT")
    p.add_argument("--highlight", help="edge-list file or fixture whose arcs are highlighted")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
