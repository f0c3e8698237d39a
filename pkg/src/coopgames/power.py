"""Classical coalition indices: generalized Shapley value, profitability and
the Grabisch-Roubens Shapley interaction index.

All values are exact :class:`fractions.Fraction` instances.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .game import CoalitionLike, GameError, SimpleGame, submasks


def _nonempty(game: SimpleGame, S: CoalitionLike) -> int:
    s = game.mask(S)
    if not s:
        raise GameError("coalition must be nonempty")
    return s


def shapley_weight(n: int, s: int, t: int) -> Fraction:
    """``(n - s - t)! t! / (n - s + 1)!``, the probability that a random
    ordering with ``S`` merged into one block puts exactly ``T`` in front."""
    return Fraction(factorial(n - s - t) * factorial(t), factorial(n - s + 1))


def generalized_shapley(game: SimpleGame, S: CoalitionLike) -> Fraction:
    """Shapley value of ``S`` acting as a single merged player.

    For a singleton this is the ordinary Shapley value.
    """
    s_mask = _nonempty(game, S)
    n, s = game.n, s_mask.bit_count()
    ev = game.value_of()
    # swing counts per |T|, weighted once at the end
    swings = [0] * (n - s + 1)
    for t in submasks(game.grand & ~s_mask):
        if ev(t | s_mask) and not ev(t):
            swings[t.bit_count()] += 1
    return sum((shapley_weight(n, s, k) * c for k, c in enumerate(swings) if c), Fraction(0))


def shapley_values(game: SimpleGame) -> list[Fraction]:
    """Classical Shapley value of every player, in id order."""
    return [generalized_shapley(game, [i]) for i in range(1, game.n + 1)]


def profitability(game: SimpleGame, S: CoalitionLike) -> Fraction:
    s_mask = _nonempty(game, S)
    total = generalized_shapley(game, S)
    for i in range(game.n):
        if s_mask >> i & 1:
            total -= generalized_shapley(game, [i + 1])
    return total


def _indicator(ev, s_mask: int, t_mask: int) -> int:
    s = s_mask.bit_count()
    total = 0
    for sub in submasks(s_mask):
        if ev(sub | t_mask):
            total += -1 if (s - sub.bit_count()) & 1 else 1
    return total


def interaction_indicator(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> int:
    """Alternating sum ``sum_{L <= S} (-1)^(|S|-|L|) v(L | T)``."""
    s_mask = _nonempty(game, S)
    t_mask = game.mask(T)
    if s_mask & t_mask:
        raise GameError("coalitions overlap")
    return _indicator(game.value_of(), s_mask, t_mask)


def shapley_interaction(game: SimpleGame, S: CoalitionLike) -> Fraction:
    """Grabisch-Roubens Shapley interaction index of ``S``."""
    s_mask = _nonempty(game, S)
    n, s = game.n, s_mask.bit_count()
    ev = game.value_of()
    by_size = [0] * (n - s + 1)
    for t in submasks(game.grand & ~s_mask):
        by_size[t.bit_count()] += _indicator(ev, s_mask, t)
    return sum((shapley_weight(n, s, k) * c for k, c in enumerate(by_size) if c), Fraction(0))
