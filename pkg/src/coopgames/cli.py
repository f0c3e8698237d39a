"""Command line interface.

Exit codes: 0 success or full match, 1 invalid game or table mismatch,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import tables
from .coopetition import MODELS, attitude, coopetition
from .decisiveness import competitive_index, cooperative_index, decisiveness
from .game import Coalition, GameError, SimpleGame, ids_of, validate
from .gamefile import GameFileError, load_game
from .oracles import proposition_harness
from .power import generalized_shapley, interaction_indicator, profitability, shapley_interaction

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

COOP_FAMILY = ("coopetition", "decisiveness", "cooperative", "competitive", "attitude")
INDICES = COOP_FAMILY + ("shapley-gen", "profitability", "interaction", "interaction-indicator")
NEEDS_AGAINST = ("attitude", "interaction-indicator")


class UsageError(Exception):
    pass


def render_value(x: Fraction | int) -> str:
    return str(Fraction(x))


def compute_index(game: SimpleGame, index: str, S: Coalition, model: str,
                  against: Coalition | None = None) -> Fraction:
    if index in COOP_FAMILY and len(S) < 2:
        raise UsageError(f"index {index!r} needs a coalition of at least 2 players, got {S}")
    if index in NEEDS_AGAINST:
        if against is None:
            raise UsageError(f"index {index!r} requires --against")
        if not against.isdisjoint(S):
            raise UsageError(f"--against {against} overlaps --coalition {S}")
    if index not in COOP_FAMILY and not S:
        raise UsageError(f"index {index!r} needs a nonempty coalition")
    if index == "coopetition":
        return coopetition(game, S, model, model)
    if index == "decisiveness":
        return decisiveness(game, S, model, model)
    if index == "cooperative":
        return cooperative_index(game, S, model, model)
    if index == "competitive":
        return competitive_index(game, S, model, model)
    if index == "attitude":
        return attitude(game, S, against, model)
    if index == "shapley-gen":
        return generalized_shapley(game, S)
    if index == "profitability":
        return profitability(game, S)
    if index == "interaction":
        return shapley_interaction(game, S)
    return Fraction(interaction_indicator(game, S, against))


def _row(S: Coalition, index: str, model: str, value: Fraction) -> dict:
    return {
        "coalition": list(S),
        "size": len(S),
        "index": index,
        "model": model if index in COOP_FAMILY else "-",
        "value": render_value(value),
    }


def format_rows(rows: list[dict], fmt: str, columns: list[str]) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max([len(c)] + [len(r[j]) for r in cells]) for j, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, list):
        return ",".join(map(str, value))
    return str(value)


ROW_COLUMNS = ["coalition", "size", "index", "model", "value"]


def _coalition_arg(text: str, game: SimpleGame, flag: str) -> Coalition:
    try:
        c = Coalition.parse(text)
        game.mask(c)
    except GameError as exc:
        raise UsageError(f"{flag}: {exc}") from None
    return c


def _load(args) -> SimpleGame:
    game = load_game(args.file, relax_quota=getattr(args, "relax_quota", False))
    problems = validate(game)
    if problems:
        raise GameError("; ".join(problems))
    return game


# -- commands ---------------------------------------------------------------


def cmd_validate(args, out) -> int:
    try:
        game = load_game(args.file, relax_quota=args.relax_quota)
    except GameError as exc:
        out.write(f"invalid: {exc}\n")
        return EXIT_INVALID
    problems = validate(game)
    if problems:
        for p in problems:
            out.write(f"invalid: {p}\n")
        return EXIT_INVALID
    out.write("valid\n")
    return EXIT_OK


def cmd_indices(args, out) -> int:
    game = _load(args)
    S = _coalition_arg(args.coalition, game, "--coalition")
    against = _coalition_arg(args.against, game, "--against") if args.against is not None else None
    indices = args.index or ["coopetition"]
    if against is not None and not any(i in NEEDS_AGAINST for i in indices):
        raise UsageError(f"--against only applies to {', '.join(NEEDS_AGAINST)}")
    rows = [_row(S, i, args.model, compute_index(game, i, S, args.model, against)) for i in indices]
    out.write(format_rows(rows, args.format, ROW_COLUMNS))
    return EXIT_OK


def is_symmetric(game: SimpleGame) -> bool:
    if game.kind == "majority":
        return True
    by_size: dict[int, int] = {}
    ev = game.value_of()
    for m in range(1 << game.n):
        if by_size.setdefault(m.bit_count(), ev(m)) != ev(m):
            return False
    return True


def cmd_sweep(args, out) -> int:
    game = _load(args)
    if args.index in NEEDS_AGAINST:
        raise UsageError(f"index {args.index!r} needs a fixed --against and cannot be swept")
    floor = 2 if args.index in COOP_FAMILY else 1
    lo = floor if args.min_size is None else args.min_size
    hi = game.n if args.max_size is None else args.max_size
    if not floor <= lo <= hi <= game.n:
        raise UsageError(f"size bounds must satisfy {floor} <= min <= max <= n={game.n}, got {lo}..{hi}")
    if args.collapse_symmetric and not is_symmetric(game):
        raise UsageError("--collapse-symmetric needs a game whose value depends only on coalition size")
    rows = []
    for s in range(lo, hi + 1):
        if args.collapse_symmetric:
            groups = [range(1, s + 1)]
        else:
            groups = combinations(range(1, game.n + 1), s)
        masks = sorted(Coalition(g).mask for g in groups)
        for m in masks:
            S = Coalition.from_mask(m)
            rows.append(_row(S, args.index, args.model, compute_index(game, args.index, S, args.model)))
    out.write(format_rows(rows, args.format, ROW_COLUMNS))
    return EXIT_OK


CELL_COLUMNS = ["table", "row", "column", "expected", "computed", "printed", "status", "note"]


def cmd_paper_tables(args, out) -> int:
    which = tables.WHICH if args.which == "all" else (args.which,)
    cells = [c for w in which for c in tables.compute(w)]
    rows = [{
        "table": c.table,
        "row": c.row,
        "column": c.column,
        "expected": render_value(c.expected),
        "computed": render_value(c.computed),
        "printed": render_value(c.printed) if c.printed is not None else "",
        "status": c.status,
        "note": c.note,
    } for c in cells]
    out.write(format_rows(rows, args.format, CELL_COLUMNS))
    bad = sum(not c.ok for c in cells)
    errata = [c for c in cells if c.erratum]
    if args.format == "table":
        out.write(f"\n{len(cells)} cells, {len(cells) - bad} match, {bad} mismatch\n")
        if errata:
            out.write(f"{len(errata)} cells differ from the printed values:\n")
            for c in errata:
                out.write(f"  table {c.table} {c.row} {c.column}: printed {render_value(c.printed)}, "
                          f"verified {render_value(c.expected)} ({c.erratum})\n")
    return EXIT_OK if bad == 0 else EXIT_INVALID


def cmd_harness(args, out) -> int:
    report = proposition_harness(args.seed, args.trials, args.max_players)
    out.write(report.text() + "\n")
    return EXIT_OK if report.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopgames",
        description="Exact coopetition, decisiveness and classical indices for simple games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def game_args(p):
        p.add_argument("file", help="game file (JSON)")
        p.add_argument("--relax-quota", action="store_true",
                       help="accept majority quotas k <= n/2")

    def output_args(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("validate", help="check a game file")
    game_args(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("indices", help="indices of one coalition")
    game_args(p)
    p.add_argument("--coalition", required=True, help="comma-separated 1-based ids, e.g. 1,2,3")
    p.add_argument("--index", action="append", choices=INDICES,
                   help="index to compute (repeatable; default coopetition)")
    p.add_argument("--model", choices=MODELS, default="banzhaf")
    p.add_argument("--against", help="outside coalition T for attitude / interaction-indicator")
    output_args(p)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("sweep", help="one index over every coalition in a size range")
    game_args(p)
    p.add_argument("--index", choices=INDICES, default="coopetition")
    p.add_argument("--model", choices=MODELS, default="banzhaf")
    p.add_argument("--min-size", type=int)
    p.add_argument("--max-size", type=int)
    p.add_argument("--collapse-symmetric", action="store_true",
                   help="one row per size for symmetric games")
    output_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("paper-tables", help="recompute the reference tables and diff them")
    p.add_argument("which", choices=tables.WHICH + ("all",))
    output_args(p)
    p.set_defaults(func=cmd_paper_tables)

    p = sub.add_parser("harness", help="randomized theorem checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-players", type=int, default=6)
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except GameFileError as exc:
        err.write(f"coopgames: parse error in {args.file}: {exc}\n")
        return EXIT_USAGE
    except UsageError as exc:
        err.write(f"coopgames: {exc}\n")
        return EXIT_USAGE
    except GameError as exc:
        err.write(f"coopgames: invalid game: {exc}\n")
        return EXIT_INVALID
    except OSError as exc:
        err.write(f"coopgames: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
