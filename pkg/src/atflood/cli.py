"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 not AT-free under --method poly,
4 oracle size cap exceeded.  Strategies print as space-separated color ids
on one line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .atfree import find_asteroidal_triple
from .contraction import contract_monochromatic
from .generators import FAMILIES, GenSpec, InfeasibleSpecError, connected_instance
from .graph import ColoredGraph, is_connected
from .io_formats import ParseError, emit_json, parse_grid, parse_json
from .oracle import OracleBudgetError, oracle_min_moves
from .solver import NotAtFreeError, solve

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_ATFREE = 3
EXIT_ORACLE_CAP = 4


def _load(path: str, fmt: str | None) -> tuple[ColoredGraph, int | None]:
    p = Path(path)
    if fmt is None:
        fmt = "grid" if p.suffix == ".grid" else "json"
    data = p.read_text(encoding="utf-8")
    if fmt == "grid":
        return parse_grid(data), None
    return parse_json(data)


def _cmd_check(args: argparse.Namespace) -> int:
    g, _ = _load(args.input, args.format)
    witness = find_asteroidal_triple(g)
    if witness is None:
        print("atfree true")
    else:
        print(f"atfree false witness {witness.a} {witness.b} {witness.c}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g, file_source = _load(args.input, args.format)
    source = args.source if args.source is not None else (file_source or 0)
    if not 0 <= source < g.n:
        print(f"error: source {source} out of range", file=sys.stderr)
        return EXIT_INVALID
    if not is_connected(g):
        print("error: graph is not connected", file=sys.stderr)
        return EXIT_INVALID

    def by_oracle() -> int:
        try:
            res = oracle_min_moves(g, source)
        except OracleBudgetError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ORACLE_CAP
        print(res.optimum)
        if args.emit_strategy:
            print(" ".join(map(str, res.strategy.colors)))
        return EXIT_OK

    if args.method == "oracle":
        return by_oracle()
    try:
        res = solve(g, source)
    except NotAtFreeError as exc:
        if args.method == "poly":
            w = exc.witness
            print(f"error: not AT-free, witness {w.a} {w.b} {w.c}", file=sys.stderr)
            return EXIT_NOT_ATFREE
        return by_oracle()
    print(res.optimum)
    if args.emit_strategy:
        print(" ".join(map(str, res.strategy.colors)))
    return EXIT_OK


def _cmd_contract(args: argparse.Namespace) -> int:
    g, source = _load(args.input, args.format)
    contracted, cmap, new_source = contract_monochromatic(g, source or 0)
    out = emit_json(contracted, new_source if source is not None else None)
    Path(args.output).write_bytes(out)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        family=args.family,
        n=args.n,
        rows=args.rows,
        cols=args.cols,
        colors=args.colors,
        seed=args.seed,
        proper=args.proper,
    )
    g, source = connected_instance(spec, 0)
    data = emit_json(g, source)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server

    run_server(port=args.port, state_file=args.state_file)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atflood")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="AT-freeness check with witness")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=["json", "grid"])
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="minimal move count (and strategy)")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=["json", "grid"])
    p.add_argument("--source", type=int)
    p.add_argument("--method", choices=["auto", "poly", "oracle"], default="auto")
    p.add_argument("--emit-strategy", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("contract", help="monochromatic contraction to JSON")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=["json", "grid"])
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--family", choices=list(FAMILIES), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--proper", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--state-file")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InfeasibleSpecError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
