import pytest
from hypothesis import strategies as st

from coopgames.game import SimpleGame, ids_of


@st.composite
def monotone_games(draw, min_n=2, max_n=6):
    """Games generated by a random antichain of minimal winning coalitions."""
    n = draw(st.integers(min_n, max_n))
    grand = (1 << n) - 1
    picks = draw(st.sets(st.integers(1, grand), min_size=1, max_size=n + 2))
    minimal = [m for m in picks if not any(o != m and o & ~m == 0 for o in picks)]
    return SimpleGame.from_minimal_winning(n, [ids_of(m) for m in minimal])


@st.composite
def game_and_coalition(draw, min_size=2, **kw):
    game = draw(monotone_games(**kw))
    members = draw(st.sets(st.integers(1, game.n), min_size=min(min_size, game.n)))
    return game, sorted(members)


@pytest.fixture
def voting_game():
    return SimpleGame.weighted([50, 50, 50, 24, 23, 1], 102)


@pytest.fixture
def mwc_break():
    """The three five-player games where the minimal winning set 1234 is split."""
    return {
        "v": SimpleGame.from_minimal_winning(5, [[1, 2, 3, 4], [1, 4, 5]]),
        "w": SimpleGame.from_minimal_winning(5, [[1, 2, 3], [3, 4], [1, 4, 5]]),
        "u": SimpleGame.from_minimal_winning(5, [[1, 2], [3, 4], [1, 4, 5]]),
    }
