import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coopgames.coopetition import BANZHAF, SHAPLEY_OWEN, Partition2, block_interaction, partitions2
from coopgames.decisiveness import (
    IndexBundle,
    block_competition,
    block_cooperation,
    competitive_index,
    cooperative_index,
    decisiveness,
    index_bundle,
)
from coopgames.game import Coalition, SimpleGame, submasks
from coopgames.oracles import apex_closed_forms, random_outside_distribution, random_partition_distribution
from coopgames.tables import apex_banzhaf_decisiveness, apex_shapley_owen_decisiveness
from conftest import game_and_coalition

F = Fraction


class TestBlocks:
    @settings(max_examples=60, deadline=None)
    @given(game_and_coalition(max_n=5))
    def test_parts_of_interaction(self, gs):
        game, S = gs
        for pi in partitions2(S):
            for t in submasks(game.grand & ~Coalition(S).mask):
                T = Coalition.from_mask(t)
                bi = block_interaction(game, pi, T)
                co, cm = block_cooperation(game, pi, T), block_competition(game, pi, T)
                assert co - cm == bi and co + cm == abs(bi) and co * cm == 0

    def test_example(self):
        g = SimpleGame.from_minimal_winning(3, [[1], [2]])
        pi = Partition2.of([1], [2])
        assert (block_cooperation(g, pi, []), block_competition(g, pi, [])) == (0, 1)


class TestMajority:
    @pytest.mark.parametrize("model", [BANZHAF, SHAPLEY_OWEN])
    def test_grand_coalition_zero(self, model):
        b = index_bundle(SimpleGame.majority(9, 5), range(1, 10), model)
        assert b.coopetition == b.decisiveness == 0

    def test_values(self):
        b = index_bundle(SimpleGame.majority(8, 5), range(1, 6), SHAPLEY_OWEN)
        assert (b.coopetition, b.decisiveness) == (F(1, 4), F(1, 2))
        assert (b.cooperative, b.competitive) == (F(3, 8), F(1, 8))
        b = index_bundle(SimpleGame.majority(9, 7), range(1, 5), SHAPLEY_OWEN)
        assert (b.coopetition, b.decisiveness) == (F(1, 6), F(5, 18))

    def test_symmetric_game_any_coalition(self):
        g = SimpleGame.majority(7, 5)
        ref = decisiveness(g, [1, 2, 3], SHAPLEY_OWEN, SHAPLEY_OWEN)
        assert all(decisiveness(g, c, SHAPLEY_OWEN, SHAPLEY_OWEN) == ref for c in combinations(range(1, 8), 3))


class TestApex:
    def test_small(self):
        g = SimpleGame.apex_game(5, 1)
        assert index_bundle(g, [2, 3], BANZHAF) == IndexBundle(F(1, 8), F(1, 8), F(0), F(1, 4))
        assert decisiveness(g, [2, 3], SHAPLEY_OWEN, SHAPLEY_OWEN) == F(1, 6)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_banzhaf(self, n):
        g = SimpleGame.apex_game(n, 1)
        for s in range(2, n + 1):
            for members in combinations(range(1, n + 1), s):
                b = index_bundle(g, members, BANZHAF)
                assert b.coopetition == 0
                assert b.decisiveness == apex_banzhaf_decisiveness(n, s, 1 in members)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_shapley_owen(self, n):
        g = SimpleGame.apex_game(n, 1)
        for s in range(2, n + 1):
            for members in combinations(range(1, n + 1), s):
                b = index_bundle(g, members, SHAPLEY_OWEN)
                assert b.coopetition == 0
                assert b.decisiveness == apex_shapley_owen_decisiveness(n, s, 1 in members)

    def test_apex_elsewhere(self):
        g = SimpleGame.apex_game(6, 4)
        assert decisiveness(g, [4, 5], BANZHAF, BANZHAF) == apex_banzhaf_decisiveness(6, 2, True)
        assert decisiveness(g, [1, 2], BANZHAF, BANZHAF) == apex_banzhaf_decisiveness(6, 2, False)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(3, 7), st.data())
    def test_general_form_with_explicit_distributions(self, n, data):
        a = data.draw(st.integers(1, n))
        members = data.draw(st.sets(st.integers(1, n), min_size=2))
        S = Coalition(members)
        rng = random.Random(data.draw(st.integers(0, 2 ** 32)))
        p = random_partition_distribution(rng, S, positive=False)
        q = random_outside_distribution(rng, n, S, positive=False)
        b = index_bundle(SimpleGame.apex_game(n, a), S, None, p=p, q=q)
        assert (b.coopetition, b.decisiveness) == apex_closed_forms(n, a, S, p, q)


def test_sole_minimal_winning_coalition():
    g = SimpleGame.from_minimal_winning(6, [[2, 4, 5]])
    for model in (BANZHAF, SHAPLEY_OWEN):
        b = index_bundle(g, [2, 4, 5], model)
        assert b.coopetition == b.decisiveness == b.cooperative == 1


def test_singletons_fully_competitive():
    g = SimpleGame.from_minimal_winning(5, [[1], [3]])
    b = index_bundle(g, [1, 3], SHAPLEY_OWEN)
    assert (b.coopetition, b.decisiveness) == (-1, 1)


def test_index_functions_agree(voting_game):
    S = [1, 4, 5]
    b = index_bundle(voting_game, S, SHAPLEY_OWEN)
    assert cooperative_index(voting_game, S, SHAPLEY_OWEN, SHAPLEY_OWEN) == b.cooperative
    assert competitive_index(voting_game, S, SHAPLEY_OWEN, SHAPLEY_OWEN) == b.competitive


class TestBundleIdentities:
    def test_check_flags_broken(self):
        assert IndexBundle(F(1, 2), F(0), F(1, 4), F(1, 2)).check() == ["C != C+ - C-"]
        assert "D != C+ + C-" in IndexBundle(F(1, 2), F(0), F(1, 2), F(1)).check()

    @settings(max_examples=120, deadline=None)
    @given(game_and_coalition(max_n=6), st.integers(0, 2 ** 32))
    def test_all_models(self, gs, seed):
        game, S = gs
        rng = random.Random(seed)
        C = Coalition(S)
        bundles = [index_bundle(game, S, BANZHAF), index_bundle(game, S, SHAPLEY_OWEN),
                   index_bundle(game, S, None, p=random_partition_distribution(rng, C, positive=False),
                                q=random_outside_distribution(rng, game.n, C, positive=False))]
        for b in bundles:
            assert b.check() == []
            assert b.coopetition == b.cooperative - b.competitive
            assert b.decisiveness == b.cooperative + b.competitive
            assert abs(b.coopetition) <= b.decisiveness <= 1
