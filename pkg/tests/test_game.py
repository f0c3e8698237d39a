import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coopgames.game import (
    Coalition,
    GameError,
    SimpleGame,
    derivative,
    evaluate,
    is_critical,
    is_essential_critical,
    is_null_player,
    minimal_winning_coalitions,
    submasks,
    upward_closure,
    validate,
)
from conftest import monotone_games


def labels(coalitions):
    return [c.label() for c in coalitions]


class TestCoalition:
    def test_roundtrip(self):
        c = Coalition([3, 1, 2])
        assert list(c) == [1, 2, 3]
        assert c.size == len(c) == 3
        assert c == Coalition.parse("1,2,3") == Coalition.from_mask(0b111)
        assert 2 in c and 4 not in c

    def test_set_ops(self):
        a, b = Coalition([1, 2]), Coalition([2, 3])
        assert a | b == Coalition([1, 2, 3])
        assert a & b == Coalition([2])
        assert a - b == Coalition([1])
        assert Coalition([1]) <= a and not a.isdisjoint(b)

    @pytest.mark.parametrize("bad", [[0], [33], ["1"], [True]])
    def test_rejects_bad_ids(self, bad):
        with pytest.raises(GameError):
            Coalition(bad)

    def test_parse_rejects_garbage(self):
        with pytest.raises(GameError):
            Coalition.parse("1, x")

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Coalition([1]).mask = 3


def test_submasks_counts():
    assert sorted(submasks(0b1011)) == [0, 1, 2, 3, 8, 9, 10, 11]


class TestEvaluate:
    def test_weighted(self, voting_game):
        assert evaluate(voting_game, [1, 2]) == 0
        assert evaluate(voting_game, [1, 2, 4]) == 1
        assert evaluate(voting_game, []) == 0

    def test_apex(self):
        g = SimpleGame.apex_game(4, 1)
        assert evaluate(g, [2, 3, 4]) == 1
        assert evaluate(g, [1]) == 0
        assert evaluate(g, [1, 3]) == 1
        assert evaluate(g, [2, 3]) == 0

    def test_majority(self):
        g = SimpleGame.majority(5, 3)
        assert evaluate(g, [1, 2]) == 0 and evaluate(g, [1, 4, 5]) == 1

    def test_out_of_range(self, voting_game):
        with pytest.raises(GameError, match="out of range"):
            evaluate(voting_game, [7])

    def test_call_shortcut(self, voting_game):
        assert voting_game([1, 2, 3]) == 1


class TestDerivative:
    def test_values(self, voting_game):
        # 148 >= 102 with 4,5,6 added; 100 < 102 without
        assert derivative(voting_game, [4, 5, 6], [1, 2]) == 1
        assert derivative(voting_game, [], [1, 2]) == 0
        assert derivative(SimpleGame.apex_game(5, 1), [1], [2]) == 1

    def test_overlap(self, voting_game):
        with pytest.raises(GameError, match="overlap"):
            derivative(voting_game, [1, 2], [2])


class TestCriticality:
    def test_essential_pair(self):
        g = SimpleGame.from_minimal_winning(3, [[1, 2]])
        assert is_essential_critical(g, [1, 2], [])

    def test_complementary_pair(self):
        g = SimpleGame.from_minimal_winning(3, [[1], [2]])
        assert is_critical(g, [1, 2], [])
        assert not is_essential_critical(g, [1, 2], [])

    def test_singleton(self, voting_game):
        assert is_essential_critical(voting_game, [4], [1, 2])

    def test_not_critical(self, voting_game):
        assert not is_critical(voting_game, [6], [1, 2])
        assert not is_essential_critical(voting_game, [6], [1, 2])

    def test_empty_rejected(self, voting_game):
        with pytest.raises(GameError):
            is_critical(voting_game, [], [1])

    @settings(max_examples=150, deadline=None)
    @given(monotone_games(max_n=5), st.data())
    def test_shortcut_matches_all_subsets(self, game, data):
        s = data.draw(st.integers(1, game.grand))
        t = data.draw(st.integers(0, game.grand)) & ~s
        ev = game._eval
        full = ev(s | t) - ev(t) == 1 and all(
            ev(sub | t) - ev(t) == 0 for sub in submasks(s) if sub not in (0, s))
        assert is_essential_critical(game, Coalition.from_mask(s), Coalition.from_mask(t)) == full


class TestNullPlayer:
    def test_voting_game(self, voting_game):
        assert is_null_player(voting_game, 6)
        assert not is_null_player(voting_game, 4)

    def test_apex(self):
        assert not is_null_player(SimpleGame.apex_game(5, 2), 2)

    def test_majority(self):
        g = SimpleGame.majority(8, 5)
        assert not any(is_null_player(g, i) for i in range(1, 9))

    @settings(max_examples=100, deadline=None)
    @given(monotone_games(max_n=6))
    def test_methods_agree(self, game):
        for i in range(1, game.n + 1):
            assert is_null_player(game, i) == is_null_player(game, i, method="mwc")


class TestMinimalWinning:
    def test_apex(self):
        g = SimpleGame.apex_game(4, 1)
        assert labels(minimal_winning_coalitions(g)) == ["1,2", "1,3", "1,4", "2,3,4"]

    def test_majority(self):
        mwc = minimal_winning_coalitions(SimpleGame.majority(5, 3))
        assert len(mwc) == 10 and all(len(c) == 3 for c in mwc)

    def test_voting_game(self, voting_game):
        # player 6 is null, so no minimal winning coalition contains it
        # (50 + 50 + 1 = 101 falls short of the quota)
        assert labels(minimal_winning_coalitions(voting_game)) == [
            "1,2,3", "1,2,4", "1,2,5", "1,3,4", "1,3,5", "2,3,4", "2,3,5"]

    @settings(max_examples=100, deadline=None)
    @given(monotone_games(max_n=6))
    def test_antichain_and_regenerates(self, game):
        mwc = minimal_winning_coalitions(game)
        for a in mwc:
            for b in mwc:
                assert a == b or not a <= b
        again = upward_closure(game.n, mwc)
        assert again.table == game.table


@settings(max_examples=100, deadline=None)
@given(monotone_games(max_n=6), st.data())
def test_monotone(game, data):
    s = data.draw(st.integers(0, game.grand))
    t = s | data.draw(st.integers(0, game.grand))
    assert game._eval(s) <= game._eval(t)


@settings(max_examples=40, deadline=None)
@given(monotone_games(max_n=6))
def test_derivative_is_difference(game):
    ev = game._eval
    for s in range(game.grand + 1):
        for t in submasks(game.grand & ~s):
            assert derivative(game, Coalition.from_mask(s), Coalition.from_mask(t)) == ev(s | t) - ev(t)


class TestValidate:
    def test_antichain_violation(self):
        g = SimpleGame.from_minimal_winning(3, [[1, 2], [1, 2, 3]], check=False)
        assert any("antichain" in p for p in validate(g))
        with pytest.raises(GameError, match="antichain"):
            SimpleGame.from_minimal_winning(3, [[1, 2], [1, 2, 3]])

    def test_monotonicity_violation(self):
        g = SimpleGame.from_winning(2, [[1]], check=False)
        problems = validate(g)
        assert any("monotonicity" in p for p in problems)
        assert any("grand" in p for p in problems)

    def test_weighted_valid(self, voting_game):
        assert validate(voting_game) == []

    def test_empty_winning(self):
        g = SimpleGame.from_winning(1, [[], [1]], check=False)
        assert any("empty" in p for p in validate(g))

    def test_losing_grand(self):
        with pytest.raises(GameError, match="grand"):
            SimpleGame.weighted([1, 1], 3)

    def test_majority_quota(self):
        with pytest.raises(GameError, match="n/2"):
            SimpleGame.majority(8, 4)
        assert SimpleGame.majority(8, 4, relax_quota=True).quota == 4
        with pytest.raises(GameError):
            SimpleGame.majority(8, 9)

    def test_bad_weights(self):
        with pytest.raises(GameError):
            SimpleGame.weighted([1, -1], 1)
        with pytest.raises(GameError):
            SimpleGame.weighted([1, 1], 0)

    def test_player_cap(self):
        with pytest.raises(GameError):
            SimpleGame.majority(33, 20)
        big = SimpleGame.majority(32, 17)
        assert big([*range(1, 18)]) == 1
