"""Recompute the published tables and closed forms and diff them against
the embedded expected values."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .coopetition import BANZHAF, SHAPLEY_OWEN, coopetition
from .decisiveness import index_bundle
from .game import Coalition, SimpleGame
from .oracles import apex_closed_forms
from .power import shapley_interaction

WHICH = ("1", "2", "3", "4", "apex")

MWC_BREAK_GAMES = {
    "v": [[1, 2, 3, 4], [1, 4, 5]],
    "w": [[1, 2, 3], [3, 4], [1, 4, 5]],
    "u": [[1, 2], [3, 4], [1, 4, 5]],
}

INTERFOUR_GAMES = {
    "v": [[1, 2, 3]],
    "w": [[1, 2], [2, 3], [1, 3]],
    "u": [[1], [2], [3]],
}

# (expected from the definition, value as printed where it differs)
TABLE1 = {
    ("1234", "v"): ("1/2", "-1/2"),
    ("1234", "w"): ("-1", "1"),
    ("1234", "u"): ("-1/2", "1/2"),
    ("12345", "v"): ("-1", None),
    ("12345", "w"): ("0", None),
    ("12345", "u"): ("1", None),
}

INTERFOUR = {
    "v": ("1", "-1"),
    "w": ("-2", "2"),
    "u": ("1", "-1"),
}

TABLE2 = {
    SHAPLEY_OWEN: {"1234": ("7/9", "1/4", "1/18"), "12345": ("13/20", "1/5", "1/20")},
    BANZHAF: {"1234": ("11/14", "2/7", "1/14"), "12345": ("11/15", "4/15", "1/15")},
}

# rows s = 2.., columns quota, cells "C D"
TABLE3 = {
    "n": 8,
    "quotas": (5, 6, 7, 8),
    "rows": [
        "0 2/7    0 2/7    0 2/7      1/7 1/7",
        "0 1/3    0 1/3    1/6 1/6    1/6 1/6",
        "0 8/15   1/5 1/3  1/6 1/6    1/6 1/6",
        "1/4 1/2  3/8 3/8  3/8 3/8    1/4 1/4",
        "1/5 1/3  3/5 3/5  8/15 8/15  1/3 1/3",
        "1/6 1/6  1/2 1/2  5/6 5/6    1/2 1/2",
        "1/7 1/7  3/7 3/7  5/7 5/7    1 1",
    ],
}

TABLE4 = {
    "n": 9,
    "quotas": (5, 6, 7, 8, 9),
    "rows": [
        "0 1/4  0 1/4    0 1/4      0 1/4      1/8 1/8",
        "0 2/7  0 2/7    0 2/7      1/7 1/7    1/7 1/7",
        "0 4/9  0 4/9    1/6 5/18   2/9 2/9    1/6 1/6",
        "0 3/5  1/5 2/5  3/10 3/10  3/10 3/10  1/5 1/5",
        "0 2/5  2/5 1/2  9/20 9/20  2/5 2/5    1/4 1/4",
        "0 2/9  1/3 1/3  2/3 2/3    5/9 5/9    1/3 1/3",
        "0 1/7  2/7 2/7  4/7 4/7    6/7 6/7    1/2 1/2",
        "0 0    1/4 1/4  1/2 1/2    3/4 3/4    1 1",
    ],
}


# Printed cells contradicted by three independent computations (production
# enumeration, entry-sequence averaging, frozenset brute force); the printed
# row s=4 repeats row s=3 in these columns.
TABLE3_ERRATA = {
    ("s=4", "q=7 C"): "4/15",
    ("s=4", "q=7 D"): "4/15",
    ("s=4", "q=8 C"): "1/5",
    ("s=4", "q=8 D"): "1/5",
}


@dataclass(frozen=True)
class Cell:
    """One checked value.

    ``expected`` is what the implementation must produce; ``printed`` is the
    published value when it differs. ``erratum`` is ``"sign"`` for values
    printed with the opposite sign (then magnitudes must still agree) and
    ``"value"`` for other misprints.
    """

    table: str
    row: str
    column: str
    expected: Fraction
    computed: Fraction
    printed: Fraction | None = None
    erratum: str = ""
    note: str = ""

    @property
    def ok(self) -> bool:
        if self.computed != self.expected:
            return False
        if self.erratum == "sign":
            return abs(self.printed) == abs(self.computed)
        return True

    @property
    def status(self) -> str:
        if not self.ok:
            return "MISMATCH"
        if self.erratum:
            return f"match ({self.erratum} erratum)"
        return "match"


def _coalition(label: str) -> Coalition:
    return Coalition(int(ch) for ch in label)


def table1() -> list[Cell]:
    cells = []
    for (row, name), (want, printed) in TABLE1.items():
        game = SimpleGame.from_minimal_winning(5, MWC_BREAK_GAMES[name])
        got = shapley_interaction(game, _coalition(row))
        if printed is None:
            cells.append(Cell("1", row, name, Fraction(want), got))
        else:
            cells.append(Cell("1", row, name, Fraction(want), got, Fraction(printed), "sign",
                              "printed with opposite sign"))
    for name, (want, printed) in INTERFOUR.items():
        game = SimpleGame.from_minimal_winning(4, INTERFOUR_GAMES[name])
        got = shapley_interaction(game, [1, 2, 3])
        cells.append(Cell("1", "123 (n=4)", name, Fraction(want), got, Fraction(printed), "sign",
                          "printed with opposite sign"))
    return cells


def table2() -> list[Cell]:
    cells = []
    for model, rows in TABLE2.items():
        for row, values in rows.items():
            for name, want in zip(("v", "w", "u"), values):
                game = SimpleGame.from_minimal_winning(5, MWC_BREAK_GAMES[name])
                got = coopetition(game, _coalition(row), model, model)
                cells.append(Cell("2", row, f"{model} {name}", Fraction(want), got))
    return cells


def printed_majority_cells(layout: dict) -> dict[tuple[str, str], Fraction]:
    """``{(row, column): printed value}`` for a majority-game table."""
    out = {}
    for s, line in enumerate(layout["rows"], start=2):
        toks = line.split()
        for j, k in enumerate(layout["quotas"]):
            out[f"s={s}", f"q={k} C"] = Fraction(toks[2 * j])
            out[f"s={s}", f"q={k} D"] = Fraction(toks[2 * j + 1])
    return out


def _majority_table(label: str, layout: dict, errata: dict) -> list[Cell]:
    n = layout["n"]
    printed = printed_majority_cells(layout)
    cells = []
    for s in range(2, n + 1):
        for k in layout["quotas"]:
            bundle = index_bundle(SimpleGame.majority(n, k), range(1, s + 1), SHAPLEY_OWEN)
            for col, got in ((f"q={k} C", bundle.coopetition), (f"q={k} D", bundle.decisiveness)):
                key = (f"s={s}", col)
                if key in errata:
                    cells.append(Cell(label, key[0], col, Fraction(errata[key]), got, printed[key], "value",
                                      f"printed as {printed[key]}"))
                else:
                    cells.append(Cell(label, key[0], col, printed[key], got))
    return cells


def table3() -> list[Cell]:
    return _majority_table("3", TABLE3, TABLE3_ERRATA)


def table4() -> list[Cell]:
    return _majority_table("4", TABLE4, {})


def apex_banzhaf_decisiveness(n: int, s: int, contains_apex: bool) -> Fraction:
    if s == n:
        return Fraction(0)
    if not contains_apex:
        return Fraction(1, 2 ** (n - s - 1))
    return Fraction(1, (2 ** (s - 1) - 1) * 2 ** (n - s - 1))


def apex_shapley_owen_decisiveness(n: int, s: int, contains_apex: bool) -> Fraction:
    """Shapley-Owen decisiveness of an ``s``-coalition in the ``n``-player apex game."""
    if s == n:
        return Fraction(0)
    if not contains_apex:
        return Fraction(2, (n - s) * (n - s + 1))
    return Fraction(4, s * (s - 1) * (n - s + 1))


def apex_printed_shapley_owen(n: int, s: int, contains_apex: bool) -> Fraction:
    """The corollary's Shapley-Owen expressions exactly as typeset."""
    if s == n:
        return Fraction(0)
    if not contains_apex:
        return Fraction(4, s * (s + 1) * (n - s))
    return Fraction(2, (n - s + 1) * (n - s))


def _worst(values: list[Fraction], want: Fraction) -> Fraction:
    """The first value that differs from ``want``, else ``want``."""
    return next((v for v in values if v != want), want)


def apex_table(sizes=range(3, 11), apex: int = 1) -> list[Cell]:
    """Apex game checks over every coalition, one cell per ``(n, |S|, apex in S)`` class.

    A class cell carries the first offending coalition's value, so a single
    deviation anywhere in the class shows up as a mismatch.
    """
    cells = []
    for n in sizes:
        game = SimpleGame.apex_game(n, apex)
        for s in range(2, n + 1):
            for inside in (False, True):
                if s == n and not inside or s == 1:
                    continue
                coop, bz_d, so_d, general = [], [], [], []
                for members in combinations(range(1, n + 1), s):
                    if (apex in members) != inside:
                        continue
                    bz = index_bundle(game, members, BANZHAF)
                    so = index_bundle(game, members, SHAPLEY_OWEN)
                    coop += [bz.coopetition, so.coopetition]
                    bz_d.append(bz.decisiveness)
                    so_d.append(so.decisiveness)
                    general.append(apex_closed_forms(n, apex, members, SHAPLEY_OWEN, SHAPLEY_OWEN)[1])
                if not coop:
                    continue
                where = "S=N" if s == n else ("a in S" if inside else "a not in S")
                row = f"n={n} s={s} {where}"
                cells.append(Cell("apex", row, "C (both models)", Fraction(0), _worst(coop, Fraction(0))))
                bz_want = apex_banzhaf_decisiveness(n, s, inside)
                cells.append(Cell("apex", row, "banzhaf D", bz_want, _worst(bz_d, bz_want)))
                so_want = apex_shapley_owen_decisiveness(n, s, inside)
                cells.append(Cell("apex", row, "shapley-owen D (general form)", so_want,
                                  _worst(general, so_want)))
                printed = apex_printed_shapley_owen(n, s, inside)
                if printed == so_want:
                    cells.append(Cell("apex", row, "shapley-owen D", so_want, _worst(so_d, so_want)))
                else:
                    cells.append(Cell("apex", row, "shapley-owen D", so_want, _worst(so_d, so_want), printed,
                                      "value", f"printed corollary gives {printed}"))
    return cells


BUILDERS = {"1": table1, "2": table2, "3": table3, "4": table4, "apex": apex_table}


def compute(which: str) -> list[Cell]:
    return BUILDERS[which]()
