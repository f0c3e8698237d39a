"""Cooperative/competitive split of the coopetition index and the
decisiveness index that measures how engaged a coalition is overall."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coopetition import (
    BANZHAF,
    OutsideDistribution,
    PartitionDistribution,
    Partition2,
    PDist,
    QDist,
    block_interaction,
    signed_parts,
)
from .game import CoalitionLike, SimpleGame


@dataclass(frozen=True)
class IndexBundle:
    cooperative: Fraction
    competitive: Fraction
    coopetition: Fraction
    decisiveness: Fraction

    def check(self) -> list[str]:
        """Identities every bundle must satisfy; returns the broken ones."""
        bad = []
        if self.coopetition != self.cooperative - self.competitive:
            bad.append("C != C+ - C-")
        if self.decisiveness != self.cooperative + self.competitive:
            bad.append("D != C+ + C-")
        if not (0 <= self.cooperative <= 1 and 0 <= self.competitive <= 1):
            bad.append("C+ or C- outside [0, 1]")
        if not abs(self.coopetition) <= self.decisiveness <= 1:
            bad.append("|C| <= D <= 1 violated")
        return bad


def block_cooperation(game: SimpleGame, pi: Partition2, T: CoalitionLike) -> int:
    return max(0, block_interaction(game, pi, T))


def block_competition(game: SimpleGame, pi: Partition2, T: CoalitionLike) -> int:
    return -min(0, block_interaction(game, pi, T))


def cooperative_index(game: SimpleGame, S: CoalitionLike, p: PDist = BANZHAF, q: QDist = BANZHAF) -> Fraction:
    return signed_parts(game, S, p, q)[0]


def competitive_index(game: SimpleGame, S: CoalitionLike, p: PDist = BANZHAF, q: QDist = BANZHAF) -> Fraction:
    return signed_parts(game, S, p, q)[1]


def decisiveness(game: SimpleGame, S: CoalitionLike, p: PDist = BANZHAF, q: QDist = BANZHAF) -> Fraction:
    """Average absolute block interaction of ``S``: zero only when ``S``
    never affects any outcome, whatever the sign."""
    plus, minus = signed_parts(game, S, p, q)
    return plus + minus


def index_bundle(game: SimpleGame, S: CoalitionLike, model: str | None = BANZHAF, *,
                 p: PartitionDistribution | None = None,
                 q: OutsideDistribution | None = None) -> IndexBundle:
    """All four indices from a single enumeration.

    Either name a ``model`` or pass explicit ``p`` and ``q``.
    """
    plus, minus = signed_parts(game, S, p if p is not None else model, q if q is not None else model)
    bundle = IndexBundle(plus, minus, plus - minus, plus + minus)
    assert not bundle.check(), bundle.check()
    return bundle
