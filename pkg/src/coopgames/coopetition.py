"""Block interaction, attitude and coopetition indices.

A coalition ``S`` (``|S| >= 2``) is split into two blocks in every possible
way; for each split and each outside coalition ``T`` the block interaction
``v(S|T) - v(S1|T) - v(S2|T) + v(T)`` is +1 when the two blocks need each
other, -1 when either block suffices on its own, and 0 otherwise. The
attitude averages that indicator over splits with a distribution ``p``; the
coopetition index further averages attitudes over ``T`` with a distribution
``q``.

Two distribution families are built in:

``banzhaf``
    uniform over splits and over outside coalitions.
``shapley-owen``
    induced by uniformly random orderings in which ``S`` enters as a
    contiguous block: ``p(k) = 2 k! (s-k)! / ((s-1) s!)`` for a split with
    block sizes ``k, s-k`` and ``q(t) = t! (n-s-t)! / (n-s+1)!``.

Arbitrary distributions are supported through ``PartitionDistribution.explicit``
and ``OutsideDistribution.explicit``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Mapping

from .game import Coalition, CoalitionLike, GameError, SimpleGame, as_coalition, submasks

BANZHAF = "banzhaf"
SHAPLEY_OWEN = "shapley-owen"
MODELS = (BANZHAF, SHAPLEY_OWEN)


class DistributionError(GameError):
    """An explicit distribution is not a probability distribution on its domain."""


@dataclass(frozen=True)
class Partition2:
    """Unordered split ``{first, second}`` of a coalition into two nonempty blocks.

    Canonical form keeps the lowest-id member in ``first``.
    """

    first: Coalition
    second: Coalition

    def __post_init__(self) -> None:
        a, b = self.first.mask, self.second.mask
        if not a or not b:
            raise GameError("both blocks of a split must be nonempty")
        if a & b:
            raise GameError("blocks of a split must be disjoint")
        whole = a | b
        if not a & whole & -whole:
            object.__setattr__(self, "first", Coalition.from_mask(b))
            object.__setattr__(self, "second", Coalition.from_mask(a))

    @classmethod
    def of(cls, first: CoalitionLike, second: CoalitionLike) -> Partition2:
        return cls(as_coalition(first), as_coalition(second))

    @property
    def whole(self) -> Coalition:
        return self.first | self.second

    def __str__(self) -> str:
        return "{" + self.first.label() + "|" + self.second.label() + "}"


def _split_masks(s_mask: int) -> Iterator[int]:
    """Masks of ``first`` for every canonical split, ascending by bit pattern."""
    low = s_mask & -s_mask
    rest = s_mask & ~low
    sub = 0
    while True:
        if sub != rest:
            yield low | sub
        if sub == rest:
            return
        sub = (sub - rest) & rest


def partitions2(S: CoalitionLike) -> Iterator[Partition2]:
    """All ``2^(s-1) - 1`` unordered nontrivial splits of ``S``, each once."""
    c = as_coalition(S)
    if c.size < 2:
        raise GameError("a split needs a coalition of at least 2 players")
    for a in _split_masks(c.mask):
        yield Partition2(Coalition.from_mask(a), Coalition.from_mask(c.mask & ~a))


# -- distributions ---------------------------------------------------------


def banzhaf_partition_weight(s: int, k: int) -> Fraction:
    return Fraction(1, 2 ** (s - 1) - 1)


def shapley_owen_partition_weight(s: int, k: int) -> Fraction:
    return Fraction(2 * factorial(k) * factorial(s - k), (s - 1) * factorial(s))


def banzhaf_outside_weight(n: int, s: int, t: int) -> Fraction:
    return Fraction(1, 2 ** (n - s))


def shapley_owen_outside_weight(n: int, s: int, t: int) -> Fraction:
    return Fraction(factorial(t) * factorial(n - s - t), factorial(n - s + 1))


_P_FORMS = {BANZHAF: banzhaf_partition_weight, SHAPLEY_OWEN: shapley_owen_partition_weight}
_Q_FORMS = {BANZHAF: banzhaf_outside_weight, SHAPLEY_OWEN: shapley_owen_outside_weight}


@dataclass(frozen=True)
class PartitionDistribution:
    """Distribution ``p_S`` over the splits of ``S``."""

    kind: str
    weights: Mapping[Partition2, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in (*MODELS, "explicit"):
            raise DistributionError(f"unknown partition distribution {self.kind!r}")

    @classmethod
    def explicit(cls, weights: Mapping[Partition2, Fraction]) -> PartitionDistribution:
        return cls("explicit", {k: Fraction(v) for k, v in weights.items()})

    def resolve(self, s_mask: int) -> list[tuple[int, int, Fraction]]:
        """``(first_mask, second_mask, weight)`` for every split of ``s_mask``."""
        s = s_mask.bit_count()
        if self.kind != "explicit":
            form = _P_FORMS[self.kind]
            return [(a, s_mask & ~a, form(s, a.bit_count())) for a in _split_masks(s_mask)]
        by_first = {}
        for pi, w in self.weights.items():
            if pi.whole.mask != s_mask:
                raise DistributionError(f"split {pi} is not a split of {Coalition.from_mask(s_mask)}")
            if w < 0:
                raise DistributionError(f"negative weight {w} on split {pi}")
            by_first[pi.first.mask] = w
        total = sum(by_first.values(), Fraction(0))
        if total != 1:
            raise DistributionError(f"split weights sum to {total}, not 1")
        return [(a, s_mask & ~a, by_first.get(a, Fraction(0))) for a in _split_masks(s_mask)]


@dataclass(frozen=True)
class OutsideDistribution:
    """Distribution ``q_S`` over the coalitions outside ``S``."""

    kind: str
    weights: Mapping[Coalition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in (*MODELS, "explicit"):
            raise DistributionError(f"unknown outside distribution {self.kind!r}")

    @classmethod
    def explicit(cls, weights: Mapping[CoalitionLike, Fraction]) -> OutsideDistribution:
        return cls("explicit", {as_coalition(k): Fraction(v) for k, v in weights.items()})

    def resolve(self, n: int, s_mask: int) -> Callable[[int], Fraction]:
        """A ``T mask -> weight`` function for ``T`` ranging over ``N \\ S``."""
        s = s_mask.bit_count()
        if self.kind != "explicit":
            form = _Q_FORMS[self.kind]
            cache = [form(n, s, t) for t in range(n - s + 1)]
            return lambda t_mask: cache[t_mask.bit_count()]
        outside = ((1 << n) - 1) & ~s_mask
        table: dict[int, Fraction] = {}
        for c, w in self.weights.items():
            if c.mask & ~outside:
                raise DistributionError(f"{c} is not disjoint from {Coalition.from_mask(s_mask)} within 1..{n}")
            if w < 0:
                raise DistributionError(f"negative weight {w} on {c}")
            table[c.mask] = w
        total = sum(table.values(), Fraction(0))
        if total != 1:
            raise DistributionError(f"outside weights sum to {total}, not 1")
        zero = Fraction(0)
        return lambda t_mask: table.get(t_mask, zero)


PDist = PartitionDistribution | str
QDist = OutsideDistribution | str


def as_partition_distribution(p: PDist) -> PartitionDistribution:
    return p if isinstance(p, PartitionDistribution) else PartitionDistribution(p)


def as_outside_distribution(q: QDist) -> OutsideDistribution:
    return q if isinstance(q, OutsideDistribution) else OutsideDistribution(q)


# -- indicators and indices ------------------------------------------------


def _bi(ev, a: int, b: int, t: int) -> int:
    return ev(a | b | t) - ev(a | t) - ev(b | t) + ev(t)


def block_interaction(game: SimpleGame, pi: Partition2, T: CoalitionLike) -> int:
    """Block interaction of the two blocks of ``pi`` against ``T``: -1, 0 or 1."""
    a, b = game.mask(pi.first), game.mask(pi.second)
    t = game.mask(T)
    if (a | b) & t:
        raise GameError("split overlaps the outside coalition")
    return _bi(game._eval, a, b, t)


def _coalition_mask(game: SimpleGame, S: CoalitionLike) -> int:
    s_mask = game.mask(S)
    if s_mask.bit_count() < 2:
        raise GameError("coalition needs at least 2 players")
    return s_mask


def attitude(game: SimpleGame, S: CoalitionLike, T: CoalitionLike, p: PDist = BANZHAF) -> Fraction:
    """``p``-average of the block interaction of ``S`` against ``T``."""
    s_mask = _coalition_mask(game, S)
    t_mask = game.mask(T)
    if s_mask & t_mask:
        raise GameError("coalitions overlap")
    splits = as_partition_distribution(p).resolve(s_mask)
    ev = game.value_of()
    total = Fraction(0)
    for a, b, w in splits:
        if w:
            bi = _bi(ev, a, b, t_mask)
            if bi:
                total += w * bi
    return total


def banzhaf_attitude(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> Fraction:
    return attitude(game, S, T, BANZHAF)


def shapley_owen_attitude(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> Fraction:
    return attitude(game, S, T, SHAPLEY_OWEN)


def class_counts(game: SimpleGame, S: CoalitionLike) -> tuple[list[list[int]], list[list[int]]]:
    """Counts of +1 and -1 block interactions by ``(|T|, |first block|)``.

    ``pos[t][k]`` is the number of pairs (T, split) with ``|T| = t``,
    ``|first| = k`` and block interaction +1; ``neg`` likewise for -1.
    """
    return _class_counts(game, _coalition_mask(game, S))


def _class_counts(game: SimpleGame, s_mask: int) -> tuple[list[list[int]], list[list[int]]]:
    n, s = game.n, s_mask.bit_count()
    ev = game.value_of()
    splits = [(a, s_mask & ~a, a.bit_count()) for a in _split_masks(s_mask)]
    pos = [[0] * s for _ in range(n - s + 1)]
    neg = [[0] * s for _ in range(n - s + 1)]
    for t in submasks(game.grand & ~s_mask):
        vt = ev(t)
        vst = ev(s_mask | t)
        if vt == vst:
            # v(T) = v(S|T) forces both blocks to agree with them: indicator 0
            continue
        row_p = pos[t.bit_count()]
        row_n = neg[t.bit_count()]
        for a, b, k in splits:
            bi = vst - ev(a | t) - ev(b | t) + vt
            if bi > 0:
                row_p[k] += 1
            elif bi < 0:
                row_n[k] += 1
    return pos, neg


def signed_parts(game: SimpleGame, S: CoalitionLike, p: PDist = BANZHAF,
                 q: QDist = BANZHAF) -> tuple[Fraction, Fraction]:
    """Cooperative and competitive parts ``(C+, C-)`` of the coopetition index."""
    s_mask = _coalition_mask(game, S)
    pd, qd = as_partition_distribution(p), as_outside_distribution(q)
    n, s = game.n, s_mask.bit_count()
    if pd.kind != "explicit" and qd.kind != "explicit":
        pos, neg = _class_counts(game, s_mask)
        pf, qf = _P_FORMS[pd.kind], _Q_FORMS[qd.kind]
        # integer counts meet the weights once per class
        plus = Fraction(0)
        minus = Fraction(0)
        for t in range(n - s + 1):
            qt = qf(n, s, t)
            for k in range(1, s):
                if pos[t][k]:
                    plus += qt * pf(s, k) * pos[t][k]
                if neg[t][k]:
                    minus += qt * pf(s, k) * neg[t][k]
        return plus, minus
    splits = pd.resolve(s_mask)
    weight_of = qd.resolve(n, s_mask)
    ev = game.value_of()
    plus = Fraction(0)
    minus = Fraction(0)
    for t in submasks(game.grand & ~s_mask):
        wt = weight_of(t)
        if not wt:
            continue
        for a, b, w in splits:
            if not w:
                continue
            bi = _bi(ev, a, b, t)
            if bi > 0:
                plus += wt * w
            elif bi < 0:
                minus += wt * w
    return plus, minus


def coopetition(game: SimpleGame, S: CoalitionLike, p: PDist = BANZHAF, q: QDist = BANZHAF) -> Fraction:
    """Coopetition index of ``S``: +1 pure cooperation, -1 pure competition."""
    plus, minus = signed_parts(game, S, p, q)
    return plus - minus


def banzhaf_coopetition(game: SimpleGame, S: CoalitionLike) -> Fraction:
    return coopetition(game, S, BANZHAF, BANZHAF)


def shapley_owen_coopetition(game: SimpleGame, S: CoalitionLike) -> Fraction:
    return coopetition(game, S, SHAPLEY_OWEN, SHAPLEY_OWEN)
