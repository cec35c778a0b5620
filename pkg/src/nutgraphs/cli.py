"""Command-line interface. Every verdict is printed as one key=value line."""
from __future__ import annotations

import argparse
import sys

from . import formats
from .catalog import verify_appendix
from .constructions import consecutive_circulant, null_witness_blocks, null_witness_shift
from .errors import NutGraphError
from .exactla import mat_vec_mul
from .graphcore import CirculantSpec, Graph, RewireMove, adjacency_matrix, circulant, rewire
from .nutcheck import is_nut
from .search import SearchConfig, rewiring_search, scan_circulants, survey
from .constructions import fowler_extend


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected a pair u,v, got {text!r}")
    return vals


def _read_input(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
    return formats.read_graph(text, fmt)


def _emit(g: Graph, out: str) -> None:
    if out == "g6":
        print(formats.to_graph6(g))
    elif out == "dot":
        print(formats.to_dot(g))
    elif out == "lines":
        print(formats.to_edge_list(g))
    else:
        print(f"order={g.order} edges={g.num_edges()}")
        print(formats.to_adjacency_dict(g))


def cmd_check(args) -> int:
    print(is_nut(_read_input(args.file, args.format)).line())
    return 0


def cmd_circulant(args) -> int:
    _emit(circulant(CirculantSpec(args.n, args.jumps)), args.out)
    return 0


def cmd_fowler(args) -> int:
    g = _read_input(args.file, args.format)
    before = is_nut(g)
    res = fowler_extend(g, args.vertex, before.kernel if before.is_nut else None)
    after = is_nut(res.graph)
    _emit(res.graph, args.out)
    print(f"order={res.graph.order}")
    print(after.line())
    if before.is_nut and not after.is_nut:
        print(f"extension of a nut is not a nut: {after.line()}", file=sys.stderr)
        return 1
    return 0


def cmd_scan(args) -> int:
    res = scan_circulants(args.n, args.d, jobs=args.jobs, method=args.method,
                          confirm=not args.no_confirm)
    for spec in res.hits:
        print("hit jumps=" + ",".join(map(str, spec.jumps)))
    print(f"hits={len(res.hits)} examined={res.examined}")
    return 0


def cmd_survey(args) -> int:
    rows = survey(args.d, args.lo, args.hi)
    for row in rows:
        print(row.line())
    return 1 if any("FAILED" in r.witness for r in rows) else 0


def cmd_verify_appendix(args) -> int:
    reports = verify_appendix()
    for r in reports:
        print(r.line())
    return 0 if all(r.passed for r in reports) else 1


def cmd_witness(args) -> int:
    if args.kind == "shift":
        b = null_witness_shift(args.n, args.t)
    else:
        if args.k is None:
            raise UsageError("--kind blocks requires --k")
        b = null_witness_blocks(args.n, args.t, args.k)
    print("b=" + ",".join(map(str, b)))
    if any(mat_vec_mul(adjacency_matrix(consecutive_circulant(args.n, args.t)), b)):
        print("Ab=0 FAILED")
        return 1
    print("Ab=0 confirmed")
    return 0


def cmd_rewire(args) -> int:
    (u1, v1), (u2, v2) = args.remove
    expected = {frozenset((u1, v2)), frozenset((u2, v1))}
    if {frozenset(p) for p in args.add} != expected:
        raise UsageError(f"--add must be {u1},{v2} {u2},{v1} for the given --remove pairs")
    g = _read_input(args.file, args.format)
    _emit(rewire(g, RewireMove((u1, v1), (u2, v2))), args.out)
    return 0


def cmd_search(args) -> int:
    g = _read_input(args.file, args.format)
    res = rewiring_search(g, SearchConfig(args.budget, args.restarts, args.seed))
    if not res.found:
        print(f"exhausted moves={res.moves_tried} restarts={res.restarts_used}")
        return 1
    _emit(res.graph, args.out)
    print(f"found moves={res.moves_tried} restarts={res.restarts_used}")
    print(is_nut(res.graph).line())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nutgraphs", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_in(sp, positional=True):
        sp.add_argument("--format", choices=("g6", "dict", "edges"), default="g6")
        if positional:
            sp.add_argument("file", help="input file, or - for stdin")

    def graph_out(sp):
        sp.add_argument("--out", choices=("human", "lines", "g6", "dot"), default="human")

    sp = sub.add_parser("check", help="decide whether a graph is a nut graph")
    graph_in(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("circulant", help="emit C(n, jumps)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--jumps", type=_ints, required=True)
    graph_out(sp)
    sp.set_defaults(func=cmd_circulant)

    sp = sub.add_parser("fowler", help="extend a graph around one vertex")
    sp.add_argument("--vertex", type=int, required=True)
    graph_in(sp)
    graph_out(sp)
    sp.set_defaults(func=cmd_fowler)

    sp = sub.add_parser("scan", help="all circulant nuts of given order and degree")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--method", choices=("cyclotomic", "kernel"), default="cyclotomic")
    sp.add_argument("--no-confirm", action="store_true",
                    help="skip the kernel re-check of cyclotomic hits")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("survey", help="existence of 12-regular nuts per order")
    sp.add_argument("--d", type=int, default=12)
    sp.add_argument("--from", dest="lo", type=int, default=13)
    sp.add_argument("--to", dest="hi", type=int, default=63)
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("verify-appendix", help="check the twelve shipped fixtures")
    sp.set_defaults(func=cmd_verify_appendix)

    sp = sub.add_parser("witness", help="null vector with zeros for C(n, {1..t})")
    sp.add_argument("--kind", choices=("shift", "blocks"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("rewire", help="apply one 2-switch")
    sp.add_argument("--remove", type=_pair, nargs=2, required=True, metavar="U,V")
    sp.add_argument("--add", type=_pair, nargs=2, required=True, metavar="U,V")
    graph_in(sp)
    graph_out(sp)
    sp.set_defaults(func=cmd_rewire)

    sp = sub.add_parser("search", help="randomized rewiring search for a nut")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=1000)
    sp.add_argument("--restarts", type=int, default=1)
    graph_in(sp)
    graph_out(sp)
    sp.set_defaults(func=cmd_search)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, NutGraphError) as exc:
        print(f"nutgraphs {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
