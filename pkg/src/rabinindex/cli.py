"""Command-line front end.

Subcommands cover generation (``gen``), color reduction (``index``),
solving (``solve``), solution checking (``verify``), brute-force oracles
for small games (``equiv``, ``oracle``), the polynomial membership test
(``member``), and the CSV benchmark harness (``bench``).

Exit codes: 0 success; 2 usage error; 3 unreadable or malformed input;
4 search budget exhausted; 5 node cap exceeded; 6 a requested check did
not hold (verification, equivalence, membership).  Failures print one
``error: <category>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .arena import ParityGame, index
from .bench import bench_run, rows_to_csv
from .cycles import NodeCapExceeded
from .generators import FAMILY_NAMES, RandomConfig, gen_family, gen_random
from .oracles import brute_force_rabin_index, equivalence_witness
from .pgsolver import PGSolverError, parse_pgsolver, parse_solution, write_pgsolver, write_solution
from .reduction import (
    BudgetExhausted,
    OracleMode,
    abstract_membership,
    rabin,
    static_compress,
)
from .solver import verify_solution, zielonka_solve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_CAP = 5
EXIT_CHECK = 6


class CliError(Exception):
    def __init__(self, category: str, message: str, code: int):
        super().__init__(message)
        self.category = category
        self.code = code


def _fail(category: str, message: str, code: int) -> "CliError":
    return CliError(category, message, code)


def _load_game(path: str) -> ParityGame:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _fail("parse", f"cannot read {path}: {exc}", EXIT_PARSE) from exc
    try:
        return parse_pgsolver(text)
    except PGSolverError as exc:
        raise _fail("parse", f"{path}: {exc}", EXIT_PARSE) from exc


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "random":
        if len(args.params) != 1:
            raise _fail("usage", "random takes one xx/yy/zz/cc argument", EXIT_USAGE)
        try:
            config = RandomConfig.parse(args.params[0], seed=args.seed)
        except ValueError as exc:
            raise _fail("usage", str(exc), EXIT_USAGE) from exc
        game = gen_random(config)
    else:
        try:
            params = tuple(int(p) for p in args.params)
            game = gen_family(args.kind, params)
        except ValueError as exc:
            raise _fail("usage", str(exc), EXIT_USAGE) from exc
    _emit(write_pgsolver(game), args.output)
    return EXIT_OK


def _cmd_index(args: argparse.Namespace) -> int:
    game = _load_game(args.file)
    arena = game.arena
    before = index(arena.colors)
    if args.mode == "static":
        reduced = static_compress(arena.colors)
        print(f"index: {before} -> {index(reduced)}")
    else:
        mode = OracleMode.EXACT if args.mode == "exact" else OracleMode.ABSTRACT
        budget = args.budget if mode is OracleMode.EXACT else None
        try:
            reduced, report = rabin(arena, mode=mode, budget_limit=budget)
        except BudgetExhausted as exc:
            if args.fallback == "alpha":
                print("warning: budget exhausted, falling back to alpha", file=sys.stderr)
                reduced, report = rabin(arena, mode=OracleMode.ABSTRACT)
            else:
                raise _fail("budget", str(exc), EXIT_BUDGET) from exc
        print(f"index: {before} -> {index(reduced)}, iterations: {report.iteration_count}")
    if args.output is not None:
        out_game = ParityGame(
            arena=arena.with_colors(reduced), owners=game.owners, names=game.names
        )
        Path(args.output).write_text(write_pgsolver(out_game))
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    game = _load_game(args.file)
    arena = game.arena
    if args.pre == "static":
        colors = static_compress(arena.colors)
    elif args.pre == "alpha":
        colors, _ = rabin(arena, mode=OracleMode.ABSTRACT)
    else:
        colors = arena.colors
    working = ParityGame(arena=arena.with_colors(colors), owners=game.owners, names=game.names)
    solution = zielonka_solve(working)
    sys.stdout.write(write_solution(solution))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    game = _load_game(args.file)
    try:
        text = Path(args.solution).read_text()
    except OSError as exc:
        raise _fail("parse", f"cannot read {args.solution}: {exc}", EXIT_PARSE) from exc
    try:
        solution = parse_solution(text, game)
    except PGSolverError as exc:
        raise _fail("parse", f"{args.solution}: {exc}", EXIT_PARSE) from exc
    result = verify_solution(game, solution)
    if result:
        print("ok")
        return EXIT_OK
    raise _fail("verify", result.reason, EXIT_CHECK)


def _cmd_equiv(args: argparse.Namespace) -> int:
    first = _load_game(args.first)
    second = _load_game(args.second)
    if first.arena.successors != second.arena.successors:
        raise _fail("parse", "games have different edge structure", EXIT_PARSE)
    try:
        witness = equivalence_witness(
            first.arena,
            first.arena.colors,
            second.arena.colors,
            relation=args.relation,
            node_cap=args.cap,
        )
    except NodeCapExceeded as exc:
        raise _fail("cap", str(exc), EXIT_CAP) from exc
    if witness is None:
        print("equivalent")
        return EXIT_OK
    shape = "simple cycle" if args.relation == "simple" else "closed walk through"
    print(f"inequivalent: {shape} {sorted(witness)} separates the colorings")
    return EXIT_CHECK


def _cmd_oracle(args: argparse.Namespace) -> int:
    game = _load_game(args.file)
    if game.arena.node_count > args.cap:
        raise _fail(
            "cap",
            f"game has {game.arena.node_count} nodes, oracle capped at {args.cap}",
            EXIT_CAP,
        )
    value = brute_force_rabin_index(game.arena, node_cap=args.cap)
    print(f"rabin index: {value}")
    return EXIT_OK


def _cmd_member(args: argparse.Namespace) -> int:
    game = _load_game(args.file)
    if abstract_membership(game, args.k):
        print("yes")
        return EXIT_OK
    print("no")
    return EXIT_CHECK


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        text = Path(args.spec).read_text()
    except OSError as exc:
        raise _fail("parse", f"cannot read {args.spec}: {exc}", EXIT_PARSE) from exc
    try:
        rows = bench_run(text, default_runs=args.runs)
    except ValueError as exc:
        raise _fail("parse", str(exc), EXIT_PARSE) from exc
    _emit(rows_to_csv(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabinindex",
        description="Rabin index toolkit for min-parity games in PGSolver format.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a game")
    p_gen.add_argument("kind", choices=FAMILY_NAMES + ("random",))
    p_gen.add_argument("params", nargs="+", help="family parameters or xx/yy/zz/cc")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(handler=_cmd_gen)

    p_index = sub.add_parser("index", help="reduce the coloring of a game")
    p_index.add_argument("file")
    p_index.add_argument("--mode", choices=("static", "alpha", "exact"), default="exact")
    p_index.add_argument("--budget", type=int, default=None)
    p_index.add_argument("--fallback", choices=("alpha",), default=None)
    p_index.add_argument("-o", "--output", default=None)
    p_index.set_defaults(handler=_cmd_index)

    p_solve = sub.add_parser("solve", help="solve a game")
    p_solve.add_argument("file")
    p_solve.add_argument("--pre", choices=("none", "static", "alpha"), default="none")
    p_solve.set_defaults(handler=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a claimed solution")
    p_verify.add_argument("file")
    p_verify.add_argument("solution")
    p_verify.set_defaults(handler=_cmd_verify)

    p_equiv = sub.add_parser("equiv", help="oracle equivalence of two colorings")
    p_equiv.add_argument("first")
    p_equiv.add_argument("second")
    p_equiv.add_argument("--relation", choices=("simple", "alpha"), default="simple")
    p_equiv.add_argument("--cap", type=int, default=12)
    p_equiv.set_defaults(handler=_cmd_equiv)

    p_oracle = sub.add_parser("oracle", help="brute-force oracles for small games")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_oracle_ri = oracle_sub.add_parser("rabin-index", help="exact Rabin index by search")
    p_oracle_ri.add_argument("file")
    p_oracle_ri.add_argument("--cap", type=int, default=12)
    p_oracle_ri.set_defaults(handler=_cmd_oracle)

    p_member = sub.add_parser("member", help="abstract index class membership test")
    p_member.add_argument("file")
    p_member.add_argument("-k", type=int, required=True)
    p_member.set_defaults(handler=_cmd_member)

    p_bench = sub.add_parser("bench", help="run the benchmark harness")
    p_bench.add_argument("--spec", required=True)
    p_bench.add_argument("--runs", type=int, default=1)
    p_bench.add_argument("--out", default=None)
    p_bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return exc.code
    except NodeCapExceeded as exc:
        print(f"error: cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BudgetExhausted as exc:
        print(f"error: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
