import json

import pytest

from coopgames.game import GameError, SimpleGame
from coopgames.gamefile import GameFileError, dump_game, load_game, parse_game


@pytest.mark.parametrize("game", [
    SimpleGame.apex_game(4, 2),
    SimpleGame.majority(5, 3),
    SimpleGame.weighted([3, 2, 1], 4),
    SimpleGame.from_minimal_winning(4, [[1, 2], [3]]),
])
def test_roundtrip(game):
    again = parse_game(json.loads(dump_game(game)))
    assert again.n == game.n and again.table == game.table


def test_winning_kind():
    g = parse_game({"n": 2, "kind": "winning", "winning": [[1], [1, 2]]})
    assert g([1]) == 1 and g([2]) == 0


@pytest.mark.parametrize("obj, where", [
    ([], "<root>"),
    ({"kind": "apex", "apex": 1}, "n"),
    ({"n": "4", "kind": "apex", "apex": 1}, "n"),
    ({"n": 0, "kind": "apex", "apex": 1}, "n"),
    ({"n": 4, "kind": "dictator"}, "kind"),
    ({"n": 4, "kind": "apex"}, "apex"),
    ({"n": 4, "kind": "apex", "apex": 5}, "apex"),
    ({"n": 4, "kind": "apex", "apex": 1, "quota": 3}, "quota"),
    ({"n": 3, "kind": "mwc", "mwc": [[1, 2], [4]]}, "mwc[1][0]"),
    ({"n": 3, "kind": "mwc", "mwc": [[1, 2], 3]}, "mwc[1]"),
    ({"n": 3, "kind": "mwc", "mwc": [[1, True]]}, "mwc[0][1]"),
    ({"n": 3, "kind": "weighted", "weights": [1, 2], "quota": 2}, "weights"),
    ({"n": 2, "kind": "weighted", "weights": [1, -2], "quota": 2}, "weights[1]"),
    ({"n": 2, "kind": "weighted", "weights": [1, 2], "quota": 0}, "quota"),
])
def test_structural_errors_name_the_field(obj, where):
    with pytest.raises(GameFileError) as info:
        parse_game(obj)
    assert info.value.where == where


def test_majority_quota_is_a_game_error():
    with pytest.raises(GameError):
        parse_game({"n": 8, "kind": "majority", "quota": 4})
    assert parse_game({"n": 8, "kind": "majority", "quota": 4}, relax_quota=True).quota == 4


def test_parse_is_unchecked():
    g = parse_game({"n": 3, "kind": "mwc", "mwc": [[1, 2], [1, 2, 3]]})
    assert g.n == 3


def test_bad_json(tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"n": 3,\n "kind": }')
    with pytest.raises(GameFileError) as info:
        load_game(path)
    assert info.value.where.startswith("line 2")
