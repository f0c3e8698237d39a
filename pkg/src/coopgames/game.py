"""Simple monotone games over bit-mask coalitions.

Players are numbered ``1..n`` everywhere outside this module; internally a
coalition is an ``int`` whose bit ``i - 1`` is set when player ``i`` belongs to
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

MAX_PLAYERS = 32
# Above this the 2^n truth table is not materialized.
TABLE_LIMIT = 22

KINDS = ("winning", "mwc", "weighted", "apex", "majority")


class GameError(ValueError):
    """Raised for malformed games or invalid coalition arguments."""


class Coalition:
    """An immutable set of 1-based player ids backed by a bit mask."""

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()) -> None:
        mask = 0
        for i in members:
            if isinstance(i, bool) or not isinstance(i, int):
                raise GameError(f"player id must be an integer, got {i!r}")
            if not 1 <= i <= MAX_PLAYERS:
                raise GameError(f"player id {i} outside 1..{MAX_PLAYERS}")
            mask |= 1 << (i - 1)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> Coalition:
        if mask < 0 or mask >> MAX_PLAYERS:
            raise GameError(f"mask {mask:#x} outside {MAX_PLAYERS} players")
        obj = cls.__new__(cls)
        object.__setattr__(obj, "mask", mask)
        return obj

    @classmethod
    def parse(cls, text: str) -> Coalition:
        """Parse a comma separated id list such as ``"1,2,3"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls()
        try:
            ids = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise GameError(f"bad coalition {text!r}: expected comma-separated ids") from None
        return cls(ids)

    def __setattr__(self, name, value):
        raise AttributeError("Coalition is immutable")

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(ids_of(self.mask))

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 1 and bool(self.mask >> (i - 1) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Coalition):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Coalition", self.mask))

    def __or__(self, other: Coalition) -> Coalition:
        return Coalition.from_mask(self.mask | other.mask)

    def __and__(self, other: Coalition) -> Coalition:
        return Coalition.from_mask(self.mask & other.mask)

    def __sub__(self, other: Coalition) -> Coalition:
        return Coalition.from_mask(self.mask & ~other.mask)

    def __le__(self, other: Coalition) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Coalition) -> bool:
        return self <= other and self.mask != other.mask

    def isdisjoint(self, other: Coalition) -> bool:
        return self.mask & other.mask == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order by size, then lexicographically by member ids."""
        return (self.size, tuple(self))

    def label(self) -> str:
        return ",".join(map(str, self))

    def __str__(self) -> str:
        return "{" + self.label() + "}"

    def __repr__(self) -> str:
        return f"Coalition({', '.join(map(str, self))})"


CoalitionLike = Union[Coalition, Iterable[int]]


def as_coalition(c: CoalitionLike) -> Coalition:
    if isinstance(c, Coalition):
        return c
    if isinstance(c, str):
        return Coalition.parse(c)
    return Coalition(c)


def ids_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, descending from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimpleGame:
    """A simple game ``v: 2^N -> {0, 1}`` in one of five representations.

    Build instances through the classmethods. By default construction runs
    :func:`validate` and raises :class:`GameError` on any violation; pass
    ``check=False`` to keep a malformed game around for reporting.
    """

    __slots__ = ("n", "kind", "winning", "minimal", "weights", "quota", "apex", "__dict__")

    def __init__(self, n: int, kind: str, *, winning=(), minimal=(), weights=(),
                 quota: int = 0, apex: int = 0, check: bool = True) -> None:
        if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_PLAYERS:
            raise GameError(f"player count must be an integer in 1..{MAX_PLAYERS}, got {n!r}")
        if kind not in KINDS:
            raise GameError(f"unknown game kind {kind!r}")
        self.n = n
        self.kind = kind
        self.winning: frozenset[int] = frozenset(winning)
        self.minimal: tuple[int, ...] = tuple(minimal)
        self.weights: tuple[int, ...] = tuple(weights)
        self.quota = quota
        self.apex = apex
        if check:
            problems = validate(self)
            if problems:
                raise GameError("; ".join(problems))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_winning(cls, n: int, coalitions: Iterable[CoalitionLike], *, check: bool = True) -> SimpleGame:
        masks = [_checked_mask(n, as_coalition(c)) for c in coalitions]
        return cls(n, "winning", winning=masks, check=check)

    @classmethod
    def from_minimal_winning(cls, n: int, coalitions: Iterable[CoalitionLike], *, check: bool = True) -> SimpleGame:
        masks = sorted({_checked_mask(n, as_coalition(c)) for c in coalitions},
                       key=lambda m: (m.bit_count(), ids_of(m)))
        return cls(n, "mwc", minimal=masks, check=check)

    @classmethod
    def weighted(cls, weights: Sequence[int], quota: int, *, check: bool = True) -> SimpleGame:
        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise GameError(f"weights must be nonnegative integers, got {w!r}")
        if isinstance(quota, bool) or not isinstance(quota, int) or quota <= 0:
            raise GameError(f"quota must be a positive integer, got {quota!r}")
        return cls(len(weights), "weighted", weights=weights, quota=quota, check=check)

    @classmethod
    def apex_game(cls, n: int, apex: int = 1, *, check: bool = True) -> SimpleGame:
        if n < 2:
            raise GameError("apex game needs at least 2 players")
        if isinstance(apex, bool) or not isinstance(apex, int) or not 1 <= apex <= n:
            raise GameError(f"apex player {apex!r} outside 1..{n}")
        return cls(n, "apex", apex=apex, check=check)

    @classmethod
    def majority(cls, n: int, quota: int, *, relax_quota: bool = False, check: bool = True) -> SimpleGame:
        """Symmetric majority game: ``S`` wins iff ``|S| >= quota``.

        ``n/2 < quota <= n`` is required unless ``relax_quota`` is set, in
        which case any ``1 <= quota <= n`` is accepted.
        """
        if isinstance(quota, bool) or not isinstance(quota, int):
            raise GameError(f"quota must be an integer, got {quota!r}")
        low_ok = quota >= 1 if relax_quota else 2 * quota > n
        if not (low_ok and quota <= n):
            bound = "1 <= quota <= n" if relax_quota else "n/2 < quota <= n"
            raise GameError(f"majority quota {quota} violates {bound} for n={n}")
        return cls(n, "majority", quota=quota, check=check)

    # -- evaluation -------------------------------------------------------

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def _eval(self, mask: int) -> int:
        kind = self.kind
        if kind == "majority":
            return int(mask.bit_count() >= self.quota)
        if kind == "weighted":
            total = 0
            for i, w in enumerate(self.weights):
                if mask >> i & 1:
                    total += w
            return int(total >= self.quota)
        if kind == "apex":
            a = 1 << (self.apex - 1)
            if mask & a:
                return int(mask != a)
            return int(mask == self.grand & ~a)
        if kind == "mwc":
            return int(any(w & ~mask == 0 for w in self.minimal))
        return int(mask in self.winning)

    @cached_property
    def table(self) -> bytes:
        """Truth table indexed by coalition mask (only for small ``n``)."""
        if self.n > TABLE_LIMIT:
            raise GameError(f"truth table not available for n={self.n} > {TABLE_LIMIT}")
        ev = self._eval
        return bytes(ev(m) for m in range(1 << self.n))

    def value_of(self):
        """A fast ``mask -> {0, 1}`` callable for inner loops."""
        if self.n <= TABLE_LIMIT:
            return self.table.__getitem__
        return self._eval

    def mask(self, c: CoalitionLike) -> int:
        return _checked_mask(self.n, as_coalition(c))

    @property
    def players(self) -> Coalition:
        return Coalition.from_mask(self.grand)

    def __call__(self, c: CoalitionLike) -> int:
        return self._eval(self.mask(c))

    def describe(self) -> dict:
        """The game-file object for this game."""
        out: dict = {"n": self.n, "kind": self.kind}
        if self.kind == "winning":
            out["winning"] = [ids_of(m) for m in sorted(self.winning, key=lambda m: (m.bit_count(), ids_of(m)))]
        elif self.kind == "mwc":
            out["mwc"] = [ids_of(m) for m in self.minimal]
        elif self.kind == "weighted":
            out["weights"] = list(self.weights)
            out["quota"] = self.quota
        elif self.kind == "apex":
            out["apex"] = self.apex
        else:
            out["quota"] = self.quota
        return out

    def __repr__(self) -> str:
        fields = ", ".join(f"{k}={v!r}" for k, v in self.describe().items() if k not in ("n", "kind"))
        return f"SimpleGame(n={self.n}, kind={self.kind!r}, {fields})"


def _checked_mask(n: int, c: Coalition) -> int:
    if c.mask >> n:
        bad = [i for i in c if i > n]
        raise GameError(f"player id {bad[0]} out of range 1..{n}")
    return c.mask


def validate(game: SimpleGame) -> list[str]:
    """Return a list of human-readable violations; empty means valid."""
    problems: list[str] = []
    ev = game._eval
    if game.kind == "mwc":
        ms = game.minimal
        for a in ms:
            for b in ms:
                if a != b and a & ~b == 0:
                    problems.append(
                        f"antichain violation: {Coalition.from_mask(a)} is contained in {Coalition.from_mask(b)}")
    if game.kind == "winning":
        # Monotone iff adding any single player to a winning coalition keeps it winning.
        for m in sorted(game.winning):
            for i in range(game.n):
                bit = 1 << i
                if not m & bit and (m | bit) not in game.winning:
                    problems.append(
                        f"monotonicity violation: {Coalition.from_mask(m)} wins but "
                        f"{Coalition.from_mask(m | bit)} loses")
                    break
    if ev(0) != 0:
        problems.append("empty coalition is winning (v(empty) must be 0)")
    if ev(game.grand) != 1:
        problems.append("grand coalition is losing (v(N) must be 1)")
    return problems


def evaluate(game: SimpleGame, S: CoalitionLike) -> int:
    """``v(S)``."""
    return game._eval(game.mask(S))


def _disjoint_pair(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> tuple[int, int]:
    s, t = game.mask(S), game.mask(T)
    if s & t:
        raise GameError(f"coalitions overlap: {Coalition.from_mask(s & t)}")
    return s, t


def derivative(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> int:
    """Marginal contribution ``v(S | T) - v(T)`` of ``S`` to a disjoint ``T``."""
    s, t = _disjoint_pair(game, S, T)
    return game._eval(s | t) - game._eval(t)


def is_critical(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> bool:
    s, t = _disjoint_pair(game, S, T)
    if not s:
        raise GameError("critical coalition must be nonempty")
    return game._eval(s | t) - game._eval(t) == 1


def is_essential_critical(game: SimpleGame, S: CoalitionLike, T: CoalitionLike) -> bool:
    """Critical for ``T`` while no proper nonempty subset of ``S`` is.

    By monotonicity it suffices to test the subsets missing one player.
    """
    s, t = _disjoint_pair(game, S, T)
    if not s:
        raise GameError("critical coalition must be nonempty")
    ev = game._eval
    if ev(s | t) - ev(t) != 1:
        return False
    if s.bit_count() == 1:
        return True
    bit = 1
    while bit <= s:
        if s & bit and ev((s & ~bit) | t) == 1:
            return False
        bit <<= 1
    return True


def is_null_player(game: SimpleGame, i: int, *, method: str = "enumerate") -> bool:
    """Whether player ``i`` never changes the outcome.

    ``method="enumerate"`` scans every ``T`` not containing ``i``;
    ``method="mwc"`` checks membership in the minimal winning coalitions.
    """
    bit = game.mask([i])
    if method == "mwc":
        return all(not c.mask & bit for c in minimal_winning_coalitions(game))
    if method != "enumerate":
        raise GameError(f"unknown method {method!r}")
    ev = game.value_of()
    for t in submasks(game.grand & ~bit):
        if ev(t | bit) != ev(t):
            return False
    return True


def minimal_winning_coalitions(game: SimpleGame) -> list[Coalition]:
    """Winning coalitions whose one-player-removed subsets all lose.

    Sorted by size, then lexicographically by member ids.
    """
    ev = game.value_of()
    out = []
    for m in range(1, game.grand + 1):
        if not ev(m):
            continue
        rest = m
        while rest:
            low = rest & -rest
            if ev(m & ~low):
                break
            rest &= rest - 1
        else:
            out.append(Coalition.from_mask(m))
    out.sort(key=Coalition.sort_key)
    return out


def upward_closure(n: int, minimal: Iterable[Coalition]) -> SimpleGame:
    """The ``winning`` representation of the game generated by ``minimal``."""
    gens = [c.mask for c in minimal]
    winning = [m for m in range(1 << n) if any(g & ~m == 0 for g in gens)]
    return SimpleGame(n, "winning", winning=winning)
