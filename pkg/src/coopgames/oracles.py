"""Naive reference implementations and randomized property checks.

Nothing here is meant to be fast. Each oracle takes a route independent of
the production code in :mod:`coopgames.coopetition` and
:mod:`coopgames.power`, so agreement between the two is evidence for both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterator

from .coopetition import (
    BANZHAF,
    SHAPLEY_OWEN,
    OutsideDistribution,
    Partition2,
    PartitionDistribution,
    as_outside_distribution,
    as_partition_distribution,
    attitude,
    coopetition,
    partitions2,
)
from .decisiveness import index_bundle
from .game import (
    Coalition,
    CoalitionLike,
    GameError,
    SimpleGame,
    ids_of,
    is_critical,
    is_essential_critical,
    minimal_winning_coalitions,
    submasks,
)

SEQUENCE_LIMIT = 10


class OracleLimitError(GameError):
    """The requested brute force would enumerate too many objects."""


# -- entry sequences --------------------------------------------------------


def entry_sequences(n: int, S: Coalition) -> Iterator[tuple[int, ...]]:
    """Every ordering of ``1..n`` in which the members of ``S`` are adjacent."""
    block = 0
    others = [i for i in range(1, n + 1) if i not in S]
    members = list(S)
    for outer in permutations(others + [block]):
        pos = outer.index(block)
        for inner in permutations(members):
            yield outer[:pos] + inner + outer[pos + 1:]


def _sequential_sum(ev, order: tuple[int, ...], S: Coalition) -> int:
    """Sum over ``q = 1..s-1`` of the block interaction between the first
    ``q`` and the last ``s - q`` members of ``S`` in ``order``, against the
    players preceding ``S``."""
    s = len(S)
    start = next(k for k, i in enumerate(order) if i in S)
    pre = 0
    for i in order[:start]:
        pre |= 1 << (i - 1)
    block = order[start:start + s]
    whole = 0
    for i in block:
        whole |= 1 << (i - 1)
    total = 0
    first = 0
    for i in block[:-1]:
        first |= 1 << (i - 1)
        last = whole & ~first
        total += ev(whole | pre) - ev(first | pre) - ev(last | pre) + ev(pre)
    return total


def _guard(game: SimpleGame, S: Coalition, limit: int) -> None:
    if len(S) < 2:
        raise GameError("coalition needs at least 2 players")
    if game.n > limit:
        raise OracleLimitError(
            f"sequence enumeration over n={game.n} players exceeds the limit {limit} "
            f"({factorial(game.n - len(S) + 1) * factorial(len(S))} orderings)")


def so_coopetition_by_sequences(game: SimpleGame, S: CoalitionLike, *, limit: int = SEQUENCE_LIMIT) -> Fraction:
    """Shapley-Owen coopetition as the plain average of the sequential
    attitude over every ordering that keeps ``S`` contiguous."""
    c = Coalition.from_mask(game.mask(S))
    _guard(game, c, limit)
    ev = game._eval
    total = 0
    count = 0
    for order in entry_sequences(game.n, c):
        total += _sequential_sum(ev, order, c)
        count += 1
    assert count == factorial(game.n - len(c) + 1) * factorial(len(c))
    return Fraction(total, (len(c) - 1) * count)


def so_attitude_by_sequences(game: SimpleGame, S: CoalitionLike, T: CoalitionLike, *,
                             limit: int = SEQUENCE_LIMIT) -> Fraction:
    """Average sequential attitude over the orderings whose predecessors of
    ``S`` are exactly ``T``."""
    c = Coalition.from_mask(game.mask(S))
    t = Coalition.from_mask(game.mask(T))
    if not c.isdisjoint(t):
        raise GameError("coalitions overlap")
    _guard(game, c, limit)
    ev = game._eval
    total = 0
    count = 0
    for order in entry_sequences(game.n, c):
        start = next(k for k, i in enumerate(order) if i in c)
        if set(order[:start]) != set(t):
            continue
        total += _sequential_sum(ev, order, c)
        count += 1
    s, n = len(c), game.n
    assert count == factorial(len(t)) * factorial(s) * factorial(n - s - len(t))
    return Fraction(total, (s - 1) * count)


# -- closed forms -------------------------------------------------------------


def apex_closed_forms(n: int, a: int, S: CoalitionLike, p, q) -> tuple[Fraction, Fraction]:
    """Coopetition and decisiveness of ``S`` in the apex game, from the
    case analysis of where the apex player sits relative to ``S``.

    ``p`` and ``q`` may be model names or explicit distributions.
    """
    c = Coalition.from_mask(SimpleGame.apex_game(n, a).mask(S))
    if len(c) < 2:
        raise GameError("coalition needs at least 2 players")
    grand = (1 << n) - 1
    if c.mask == grand:
        return Fraction(0), Fraction(0)
    qw = as_outside_distribution(q).resolve(n, c.mask)
    abit = 1 << (a - 1)
    if a not in c:
        hi, lo = qw(grand & ~(c.mask | abit)), qw(abit)
        return hi - lo, hi + lo
    pw = {first: w for first, _, w in as_partition_distribution(p).resolve(c.mask)}
    split = Partition2(Coalition([a]), c - Coalition([a]))
    weight = pw[split.first.mask]
    hi, lo = qw(0), qw(grand & ~c.mask)
    return (hi - lo) * weight, (hi + lo) * weight


def banzhaf_null_factor(s: int) -> Fraction:
    """Ratio of Banzhaf coopetition after and before adjoining a null player
    to a coalition of size ``s``."""
    return Fraction(2 * (2 ** (s - 1) - 1), 2 ** s - 1)


def shapley_owen_null_factor(s: int) -> Fraction:
    return 1 - Fraction(2, s * (s + 1))


def generalized_shapley_by_orderings(game: SimpleGame, S: CoalitionLike) -> Fraction:
    """Shapley value of ``S`` merged into one player, by averaging its
    marginal contribution over every ordering of the reduced player set."""
    s_mask = game.mask(S)
    if not s_mask:
        raise GameError("coalition must be nonempty")
    tokens = [1 << i for i in range(game.n) if not s_mask >> i & 1] + [s_mask]
    ev = game._eval
    swings = 0
    count = 0
    for order in permutations(tokens):
        pre = 0
        for tok in order:
            if tok == s_mask:
                swings += ev(pre | s_mask) - ev(pre)
                break
            pre |= tok
        count += 1
    return Fraction(swings, count)


def moebius(game: SimpleGame) -> list[int]:
    """Moebius transform ``m(A) = sum_{B <= A} (-1)^{|A-B|} v(B)``."""
    m = list(game.table)
    for i in range(game.n):
        bit = 1 << i
        for a in range(len(m)):
            if a & bit:
                m[a] -= m[a ^ bit]
    return m


def shapley_interaction_by_moebius(game: SimpleGame, S: CoalitionLike) -> Fraction:
    """Interaction index via ``sum_{A >= S} m(A) / (|A| - |S| + 1)``."""
    s_mask = game.mask(S)
    m = moebius(game)
    s = s_mask.bit_count()
    total = Fraction(0)
    for a, coef in enumerate(m):
        if coef and a & s_mask == s_mask:
            total += Fraction(coef, a.bit_count() - s + 1)
    return total


# -- game generators --------------------------------------------------------


def random_monotone_game(rng: random.Random, n: int, k: int | None = None) -> SimpleGame:
    """Sample ``k`` nonempty subsets, keep the minimal ones, fall back to ``{N}``."""
    grand = (1 << n) - 1
    if k is None:
        k = rng.randint(1, n + 1)
    picks = {rng.randint(1, grand) for _ in range(k)}
    minimal = [m for m in picks if not any(o != m and o & ~m == 0 for o in picks)]
    if not minimal:
        minimal = [grand]
    return SimpleGame.from_minimal_winning(n, [ids_of(m) for m in minimal])


def _monotone_tables(n: int) -> list[int]:
    if n == 0:
        return [0, 1]
    prev = _monotone_tables(n - 1)
    half = 1 << (n - 1)
    return [lo | (hi << half) for lo in prev for hi in prev if lo & ~hi == 0]


def all_monotone_games(n: int) -> Iterator[SimpleGame]:
    """Every simple monotone game on ``n`` players (``v(empty) = 0``, ``v(N) = 1``)."""
    if n > 5:
        raise OracleLimitError("exhaustive game enumeration is limited to n <= 5")
    size = 1 << n
    for tbl in _monotone_tables(n):
        if tbl & 1 or not tbl >> (size - 1) & 1:
            continue
        yield SimpleGame(n, "winning", winning=[m for m in range(size) if tbl >> m & 1], check=False)


def random_partition_distribution(rng: random.Random, S: Coalition, *, positive: bool = True) -> PartitionDistribution:
    splits = list(partitions2(S))
    raw = [rng.randint(1 if positive else 0, 9) for _ in splits]
    if not any(raw):
        raw[rng.randrange(len(raw))] = 1
    total = sum(raw)
    return PartitionDistribution.explicit({pi: Fraction(w, total) for pi, w in zip(splits, raw)})


def random_outside_distribution(rng: random.Random, n: int, S: Coalition, *, positive: bool = True) -> OutsideDistribution:
    outside = ((1 << n) - 1) & ~S.mask
    masks = list(submasks(outside))
    raw = [rng.randint(1 if positive else 0, 9) for _ in masks]
    if not any(raw):
        raw[rng.randrange(len(raw))] = 1
    total = sum(raw)
    return OutsideDistribution.explicit({Coalition.from_mask(m): Fraction(w, total) for m, w in zip(masks, raw)})


def _random_subset(rng: random.Random, pool: int, *, min_size: int = 0) -> int:
    while True:
        out = 0
        for i in ids_of(pool):
            if rng.random() < 0.5:
                out |= 1 << (i - 1)
        if out.bit_count() >= min_size:
            return out


def split_triple(rng: random.Random, n: int) -> tuple[SimpleGame, SimpleGame, SimpleGame, int]:
    """Games ``(v, w, u)`` where a minimal winning set ``W`` of ``v`` is
    replaced by two overlapping proper subsets covering it in ``w``, and by
    two disjoint subsets of those, still covering ``W``, in ``u``.

    Returns the games and the mask of ``W``.
    """
    grand = (1 << n) - 1
    while True:
        W = _random_subset(rng, grand, min_size=3)
        w1 = w2 = hat1 = hat2 = 0
        roles = [rng.choice("12b") for _ in ids_of(W)]
        if not {"1", "2", "b"} <= set(roles):
            continue
        for i, role in zip(ids_of(W), roles):
            bit = 1 << (i - 1)
            if role in "1b":
                w1 |= bit
            if role in "2b":
                w2 |= bit
            if role == "1" or (role == "b" and rng.random() < 0.5):
                hat1 |= bit
            else:
                hat2 |= bit
        if not hat1 or not hat2:
            continue
        others = {rng.randint(1, grand) for _ in range(rng.randint(0, 3))}
        families = [others | {W}, others | {w1, w2}, others | {hat1, hat2}]
        if any(len(f) != len(others) + k for f, k in zip(families, (1, 2, 2))):
            continue
        if not all(_is_antichain(f) for f in families):
            continue
        games = [SimpleGame.from_minimal_winning(n, [ids_of(m) for m in f]) for f in families]
        return games[0], games[1], games[2], W


def _is_antichain(masks) -> bool:
    return not any(a != b and a & ~b == 0 for a in masks for b in masks)


# -- proposition harness --------------------------------------------------


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    violations: int = 0
    examples: list[str] = field(default_factory=list)

    def fail(self, detail: str) -> None:
        self.violations += 1
        if len(self.examples) < 3:
            self.examples.append(detail)

    def line(self) -> str:
        return f"{self.name:<28} trials={self.trials:<6} violations={self.violations}"


@dataclass
class HarnessReport:
    seed: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.violations == 0 for c in self.checks)

    def text(self) -> str:
        lines = [f"seed={self.seed}"] + [c.line() for c in self.checks]
        for c in self.checks:
            for ex in c.examples:
                lines.append(f"  {c.name}: {ex}")
        return "\n".join(lines)


def _random_disjoint(rng: random.Random, n: int, min_s: int = 2) -> tuple[int, int]:
    grand = (1 << n) - 1
    s = _random_subset(rng, grand, min_size=min_s)
    t = _random_subset(rng, grand & ~s)
    return s, t


def _check_attitude_poles(rng, res: CheckResult, max_n: int) -> None:
    # Critical S wrt T, strictly positive p:
    # attitude = 1 iff essential critical; = -1 iff every member critical alone.
    while True:
        n = rng.randint(2, max_n)
        game = random_monotone_game(rng, n)
        s, t = _random_disjoint(rng, n)
        if s.bit_count() >= 2 and is_critical(game, ids_of(s), ids_of(t)):
            break
    S, T = Coalition.from_mask(s), Coalition.from_mask(t)
    p = rng.choice([BANZHAF, SHAPLEY_OWEN, random_partition_distribution(rng, S)])
    a = attitude(game, S, T, p)
    ess = is_essential_critical(game, S, T)
    each = all(is_critical(game, [i], T) for i in S)
    res.trials += 1
    if (a == 1) != ess or (a == -1) != each:
        res.fail(f"{game!r} S={S} T={T} attitude={a} essential={ess} all-critical={each}")


def _check_dilution(rng, res: CheckResult, max_n: int) -> None:
    while True:
        n = rng.randint(2, max_n)
        grand = (1 << n) - 1
        star = 1 << rng.randrange(n)
        s = _random_subset(rng, grand & ~star, min_size=1)
        t = _random_subset(rng, grand & ~star & ~s)
        extra = {rng.randint(1, grand) for _ in range(rng.randint(0, 3))}
        gens = extra | {s | t, star | t}
        minimal = [m for m in gens if not any(o != m and o & ~m == 0 for o in gens)]
        game = SimpleGame.from_minimal_winning(n, [ids_of(m) for m in minimal])
        if is_essential_critical(game, ids_of(s), ids_of(t)) and is_critical(game, ids_of(star), ids_of(t)):
            break
    big = Coalition.from_mask(s | star)
    p = random_partition_distribution(rng, big, positive=False)
    weight = p.weights[Partition2(Coalition.from_mask(s), Coalition.from_mask(star))]
    a = attitude(game, big, Coalition.from_mask(t), p)
    res.trials += 1
    if a != -weight:
        res.fail(f"{game!r} S={Coalition.from_mask(s)} i*={ids_of(star)} attitude={a} expected={-weight}")


def coopetition_pole(game: SimpleGame, S: Coalition) -> int:
    """+1 if the only minimal winning coalition is ``S``, -1 if they are the
    singletons of ``S``, else 0."""
    mwc = minimal_winning_coalitions(game)
    if mwc == [S]:
        return 1
    if sorted(mwc, key=Coalition.sort_key) == sorted((Coalition([i]) for i in S), key=Coalition.sort_key):
        return -1
    return 0


def _check_coopetition_poles(rng, res: CheckResult, max_n: int) -> None:
    n = rng.randint(2, max_n)
    s, _ = _random_disjoint(rng, n)
    S = Coalition.from_mask(s)
    kind = rng.randrange(3)
    if kind == 0:
        game = SimpleGame.from_minimal_winning(n, [list(S)])
    elif kind == 1:
        game = SimpleGame.from_minimal_winning(n, [[i] for i in S])
    else:
        game = random_monotone_game(rng, n)
    p = rng.choice([BANZHAF, SHAPLEY_OWEN, random_partition_distribution(rng, S)])
    q = rng.choice([BANZHAF, SHAPLEY_OWEN, random_outside_distribution(rng, n, S)])
    c = coopetition(game, S, p, q)
    pole = coopetition_pole(game, S)
    res.trials += 1
    if (c == 1) != (pole == 1) or (c == -1) != (pole == -1):
        res.fail(f"{game!r} S={S} C={c} pole={pole}")


def _game_with_null(rng, max_n: int) -> tuple[SimpleGame, int]:
    n = rng.randint(4, max_n)
    eta = rng.randint(1, n)
    base = random_monotone_game(rng, n - 1)
    # relabel so that player eta is skipped
    relabel = [i if i < eta else i + 1 for i in range(1, n)]
    mwc = [[relabel[i - 1] for i in c] for c in minimal_winning_coalitions(base)]
    return SimpleGame.from_minimal_winning(n, mwc), eta


def _check_null_scaling(rng, res: CheckResult, model: str, max_n: int) -> None:
    game, eta = _game_with_null(rng, max_n)
    grand = game.grand & ~(1 << (eta - 1))
    s = _random_subset(rng, grand, min_size=2)
    S = Coalition.from_mask(s)
    factor = banzhaf_null_factor(len(S)) if model == BANZHAF else shapley_owen_null_factor(len(S))
    before = coopetition(game, S, model, model)
    after = coopetition(game, S | Coalition([eta]), model, model)
    res.trials += 1
    if after != factor * before:
        res.fail(f"{game!r} S={S} null={eta} before={before} after={after} factor={factor}")


def _check_split_monotonicity(rng, res: CheckResult, max_n: int) -> None:
    n = rng.randint(3, max_n)
    v, w, u, W = split_triple(rng, n)
    s = W | _random_subset(rng, v.grand & ~W)
    S = Coalition.from_mask(s)
    p = rng.choice([BANZHAF, SHAPLEY_OWEN, random_partition_distribution(rng, S, positive=False)])
    q = rng.choice([BANZHAF, SHAPLEY_OWEN, random_outside_distribution(rng, n, S, positive=False)])
    cv, cw, cu = (coopetition(g, S, p, q) for g in (v, w, u))
    res.trials += 1
    if not cv >= cw >= cu:
        res.fail(f"v={v!r} w={w!r} u={u!r} S={S} values={cv},{cw},{cu}")


def _check_triplets(rng, res: CheckResult, max_n: int) -> None:
    n = rng.randint(3, max_n)
    game = random_monotone_game(rng, n)
    members = rng.sample(range(1, n + 1), 3)
    S = Coalition(members)
    T = Coalition.from_mask(_random_subset(rng, game.grand & ~S.mask))
    bz, so = attitude(game, S, T, BANZHAF), attitude(game, S, T, SHAPLEY_OWEN)
    res.trials += 1
    if bz != so:
        res.fail(f"{game!r} S={S} T={T} banzhaf={bz} shapley-owen={so}")


def _check_bundles(rng, res: CheckResult, max_n: int) -> None:
    n = rng.randint(2, max_n)
    game = random_monotone_game(rng, n)
    S = Coalition.from_mask(_random_subset(rng, game.grand, min_size=2))
    choice = rng.randrange(3)
    if choice < 2:
        bundle = index_bundle(game, S, MODELS_BY_INDEX[choice])
    else:
        bundle = index_bundle(game, S, None, p=random_partition_distribution(rng, S, positive=False),
                              q=random_outside_distribution(rng, n, S, positive=False))
    res.trials += 1
    bad = bundle.check()
    if bad:
        res.fail(f"{game!r} S={S} {bundle} broken={bad}")


MODELS_BY_INDEX = (BANZHAF, SHAPLEY_OWEN)

HARNESS_CHECKS = (
    "attitude-poles",
    "critical-dilution",
    "coopetition-poles",
    "null-scaling-banzhaf",
    "null-scaling-shapley-owen",
    "split-monotonicity",
    "triplet-coincidence",
    "bundle-identities",
)


def proposition_harness(seed: int = 0, trials: int = 1000, max_players: int = 6) -> HarnessReport:
    """Run every randomized theorem check ``trials`` times from ``seed``."""
    rng = random.Random(seed)
    runners = {
        "attitude-poles": lambda r: _check_attitude_poles(rng, r, max_players),
        "critical-dilution": lambda r: _check_dilution(rng, r, max_players),
        "coopetition-poles": lambda r: _check_coopetition_poles(rng, r, min(max_players, 5)),
        "null-scaling-banzhaf": lambda r: _check_null_scaling(rng, r, BANZHAF, max_players + 1),
        "null-scaling-shapley-owen": lambda r: _check_null_scaling(rng, r, SHAPLEY_OWEN, max_players + 1),
        "split-monotonicity": lambda r: _check_split_monotonicity(rng, r, max_players + 1),
        "triplet-coincidence": lambda r: _check_triplets(rng, r, max_players),
        "bundle-identities": lambda r: _check_bundles(rng, r, max_players + 1),
    }
    checks = []
    for name in HARNESS_CHECKS:
        res = CheckResult(name)
        for _ in range(trials):
            runners[name](res)
        checks.append(res)
    return HarnessReport(seed, checks)
