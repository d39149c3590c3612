"""Finite games as exact payoff vectors.

A game in G[n;k1..kn] is stored as V_G = [V_1, ..., V_n], n contiguous blocks
of length k = Π k_i. Profiles are ordered lexicographically with player 1 most
significant, which is the order produced by δ_{k_1}^{s_1} ⋉ ... ⋉ δ_{k_n}^{s_n}.
All external indices (players, strategies, profile indices) are 1-based.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import prod
from typing import Iterator, Optional, Sequence

from src.core.errors import InvalidProfileError, ShapeError, SpaceMismatchError
from src.core.linalg import RationalLike, RationalMatrix, stp, to_fraction

StrategyProfile = tuple[int, ...]


@dataclass(frozen=True)
class GameSpace:
    """The ambient space G[n;k1..kn]."""

    ks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if len(self.ks) < 1:
            raise ShapeError("a game needs at least one player")
        if any(k < 2 for k in self.ks):
            raise ShapeError(f"every player needs at least 2 strategies, got {list(self.ks)}")

    @classmethod
    def parse(cls, text: str) -> "GameSpace":
        """Read a "k1,k2,...,kn" signature."""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            raise ShapeError(f"bad space signature {text!r}") from e

    @property
    def n(self) -> int:
        return len(self.ks)

    @property
    def k(self) -> int:
        return prod(self.ks)

    @property
    def dim(self) -> int:
        return self.n * self.k

    @property
    def equal_strategies(self) -> bool:
        return len(set(self.ks)) == 1

    def __str__(self) -> str:
        return f"G[{self.n};{','.join(str(k) for k in self.ks)}]"

    def require_same(self, other: "GameSpace") -> None:
        if self != other:
            raise SpaceMismatchError(f"{self} and {other} are different game spaces")

    def coordinate(self, player: int, profile: StrategyProfile) -> int:
        """0-based position of c_player(profile) inside V_G."""
        check_player(self, player)
        return (player - 1) * self.k + profile_to_index(self, profile) - 1


def check_player(space: GameSpace, player: int) -> None:
    """Raise InvalidProfileError unless 1 <= player <= n."""
    if not 1 <= player <= space.n:
        raise InvalidProfileError(f"player {player} outside 1..{space.n}")


def validate_profile(space: GameSpace, profile: Sequence[int]) -> StrategyProfile:
    """Return the profile as a tuple after range-checking every strategy."""
    profile = tuple(profile)
    if len(profile) != space.n:
        raise InvalidProfileError(f"profile {profile} has {len(profile)} entries, {space} has {space.n} players")
    for i, (s, k) in enumerate(zip(profile, space.ks), start=1):
        if not 1 <= s <= k:
            raise InvalidProfileError(f"player {i} strategy {s} outside 1..{k}")
    return profile


def profile_to_index(space: GameSpace, profile: Sequence[int]) -> int:
    """Lexicographic index in 1..k, player 1 most significant."""
    profile = validate_profile(space, profile)
    index = 0
    for s, k in zip(profile, space.ks):
        index = index * k + (s - 1)
    return index + 1


def index_to_profile(space: GameSpace, idx: int) -> StrategyProfile:
    """Inverse of profile_to_index."""
    if not 1 <= idx <= space.k:
        raise InvalidProfileError(f"profile index {idx} outside 1..{space.k}")
    rest = idx - 1
    digits = []
    for k in reversed(space.ks):
        rest, s = divmod(rest, k)
        digits.append(s + 1)
    return tuple(reversed(digits))


def profiles(space: GameSpace) -> Iterator[StrategyProfile]:
    """All profiles in index order."""
    return product(*(range(1, k + 1) for k in space.ks))


def profile_label(space: GameSpace, profile: Sequence[int]) -> str:
    """Compact label such as "121"; strategies are joined with "-" once any k_i >= 10."""
    sep = "-" if max(space.ks) >= 10 else ""
    return sep.join(str(s) for s in profile)


def profile_vector(space: GameSpace, profile: Sequence[int]) -> RationalMatrix:
    """The vector form ⋉_j δ_{k_j}^{s_j} of a profile."""
    profile = validate_profile(space, profile)
    factors = [RationalMatrix.delta(k, s) for s, k in zip(profile, space.ks)]
    return reduce(stp, factors)


def opponent_profiles(space: GameSpace, player: int) -> Iterator[StrategyProfile]:
    """Profiles of s_{-i}: all strategies except the given player's, in index order."""
    check_player(space, player)
    ranges = [range(1, k + 1) for j, k in enumerate(space.ks, start=1) if j != player]
    return product(*ranges)


def with_strategy(s_minus: Sequence[int], player: int, x: int) -> StrategyProfile:
    """Insert player's strategy x into an opponent profile s_{-i}."""
    s = list(s_minus)
    s.insert(player - 1, x)
    return tuple(s)


@dataclass(frozen=True)
class Game:
    """A payoff vector V_G with exact rational entries."""

    space: GameSpace
    v: tuple[Fraction, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(to_fraction(x) for x in self.v))
        if len(self.v) != self.space.dim:
            raise ShapeError(f"{self.space} needs a payoff vector of length {self.space.dim}, got {len(self.v)}")

    @classmethod
    def zero(cls, space: GameSpace) -> "Game":
        return cls(space, (Fraction(0),) * space.dim)

    @classmethod
    def from_column(cls, space: GameSpace, column: RationalMatrix) -> "Game":
        if column.shape != (space.dim, 1):
            raise ShapeError(f"expected a {space.dim}x1 column, got {column.shape}")
        return cls(space, column.flat())

    def as_column(self) -> RationalMatrix:
        return RationalMatrix.column_vector(self.v)

    def block(self, player: int) -> tuple[Fraction, ...]:
        """Structure vector V_player."""
        check_player(self.space, player)
        k = self.space.k
        return self.v[(player - 1) * k : player * k]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.v)

    def __add__(self, other: "Game") -> "Game":
        self.space.require_same(other.space)
        return Game(self.space, tuple(a + b for a, b in zip(self.v, other.v)))

    def __sub__(self, other: "Game") -> "Game":
        self.space.require_same(other.space)
        return Game(self.space, tuple(a - b for a, b in zip(self.v, other.v)))

    def __neg__(self) -> "Game":
        return Game(self.space, tuple(-a for a in self.v))

    def scale(self, c: RationalLike) -> "Game":
        c = to_fraction(c)
        return Game(self.space, tuple(c * a for a in self.v))


def payoff(g: Game, player: int, profile: Sequence[int]) -> Fraction:
    """c_player(profile) = V_player · x, x the δ-vector of the profile."""
    return g.v[g.space.coordinate(player, profile)]


def from_table(space: GameSpace, rows: Sequence[Sequence[RationalLike]], name: Optional[str] = None) -> Game:
    """Concatenate n payoff rows (each ordered by profile index) into V_G."""
    if len(rows) != space.n:
        raise ShapeError(f"{space} needs {space.n} payoff rows, got {len(rows)}")
    for i, row in enumerate(rows, start=1):
        if len(row) != space.k:
            raise ShapeError(f"row for player {i} has {len(row)} entries, expected {space.k}")
    return Game(space, tuple(x for row in rows for x in row), name=name)


def to_table(g: Game) -> list[list[Fraction]]:
    """The n payoff rows V_1..V_n, inverse of from_table."""
    return [list(g.block(i)) for i in range(1, g.space.n + 1)]
