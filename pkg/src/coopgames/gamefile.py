"""JSON game files.

A game file holds one object::

    {"n": 6, "kind": "weighted", "weights": [50, 50, 50, 24, 23, 1], "quota": 102}

``kind`` is one of ``mwc`` / ``winning`` (field of the same name: list of
coalitions as lists of 1-based ids), ``weighted`` (``weights``, ``quota``),
``apex`` (``apex``: 1-based id) or ``majority`` (``quota``). Unknown fields
are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path

from .game import MAX_PLAYERS, GameError, SimpleGame

FIELDS = {
    "mwc": {"mwc"},
    "winning": {"winning"},
    "weighted": {"weights", "quota"},
    "apex": {"apex"},
    "majority": {"quota"},
}


class GameFileError(ValueError):
    """Structural problem in a game file; ``where`` names the offending field."""

    def __init__(self, where: str, message: str) -> None:
        super().__init__(f"{where}: {message}")
        self.where = where


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GameFileError(where, f"expected an integer, got {json.dumps(value)}")
    return value


def _coalitions(value, n: int, where: str) -> list[list[int]]:
    if not isinstance(value, list):
        raise GameFileError(where, "expected an array of coalitions")
    out = []
    for j, c in enumerate(value):
        if not isinstance(c, list):
            raise GameFileError(f"{where}[{j}]", "expected an array of player ids")
        ids = []
        for k, i in enumerate(c):
            i = _int(i, f"{where}[{j}][{k}]")
            if not 1 <= i <= n:
                raise GameFileError(f"{where}[{j}][{k}]", f"player id {i} out of range 1..{n}")
            ids.append(i)
        out.append(ids)
    return out


def parse_game(obj, *, relax_quota: bool = False) -> SimpleGame:
    """Build an unchecked game from a decoded game-file object.

    Raises :class:`GameFileError` for structural problems and
    :class:`GameError` when the values describe an impossible game (for
    instance a majority quota outside ``n/2 < quota <= n``).
    """
    if not isinstance(obj, dict):
        raise GameFileError("<root>", "expected a JSON object")
    for key in ("n", "kind"):
        if key not in obj:
            raise GameFileError(key, "missing required field")
    n = _int(obj["n"], "n")
    if not 1 <= n <= MAX_PLAYERS:
        raise GameFileError("n", f"player count must be in 1..{MAX_PLAYERS}")
    kind = obj["kind"]
    if kind not in FIELDS:
        raise GameFileError("kind", f"unknown kind {json.dumps(kind)}; expected one of {sorted(FIELDS)}")
    allowed = {"n", "kind"} | FIELDS[kind]
    for key in obj:
        if key not in allowed:
            raise GameFileError(key, f"unknown field for kind {kind!r}")
    for key in FIELDS[kind]:
        if key not in obj:
            raise GameFileError(key, f"missing required field for kind {kind!r}")

    if kind == "mwc":
        return SimpleGame.from_minimal_winning(n, _coalitions(obj["mwc"], n, "mwc"), check=False)
    if kind == "winning":
        return SimpleGame.from_winning(n, _coalitions(obj["winning"], n, "winning"), check=False)
    if kind == "weighted":
        weights = obj["weights"]
        if not isinstance(weights, list):
            raise GameFileError("weights", "expected an array of integers")
        weights = [_int(w, f"weights[{j}]") for j, w in enumerate(weights)]
        for j, w in enumerate(weights):
            if w < 0:
                raise GameFileError(f"weights[{j}]", "weights must be nonnegative")
        if len(weights) != n:
            raise GameFileError("weights", f"expected {n} weights, got {len(weights)}")
        quota = _int(obj["quota"], "quota")
        if quota <= 0:
            raise GameFileError("quota", "quota must be positive")
        return SimpleGame.weighted(weights, quota, check=False)
    if kind == "apex":
        apex = _int(obj["apex"], "apex")
        if not 1 <= apex <= n:
            raise GameFileError("apex", f"player id {apex} out of range 1..{n}")
        if n < 2:
            raise GameFileError("n", "apex game needs at least 2 players")
        return SimpleGame.apex_game(n, apex, check=False)
    quota = _int(obj["quota"], "quota")
    return SimpleGame.majority(n, quota, relax_quota=relax_quota, check=False)


def load_game(path: str | Path, *, relax_quota: bool = False) -> SimpleGame:
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return parse_game(obj, relax_quota=relax_quota)


def dump_game(game: SimpleGame) -> str:
    return json.dumps(game.describe())


__all__ = ["GameError", "GameFileError", "dump_game", "load_game", "parse_game"]
