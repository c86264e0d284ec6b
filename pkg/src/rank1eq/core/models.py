"""
Core data models for bimatrix games and their equilibria.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, Optional, Sequence, Tuple

from .errors import DimensionError, RankError
from .matrix import RatMatrix, RankOneFactorization, factor_rank_one, matrix_rank
from .rational import Vector, is_distribution, vector, zeros


@dataclass(frozen=True)
class Game:
    """A bimatrix game (A, B); A pays the row player, B the column player."""

    A: RatMatrix
    B: RatMatrix

    def __post_init__(self):
        if self.A.shape != self.B.shape:
            raise DimensionError(f"payoff shapes differ: {self.A.shape} vs {self.B.shape}")
        if self.A.rows < 1 or self.A.cols < 1:
            raise DimensionError("a game needs at least one strategy per player")

    @classmethod
    def from_rows(cls, A, B) -> "Game":
        return cls(RatMatrix.from_rows(A), RatMatrix.from_rows(B))

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    @property
    def payoff_sum(self) -> RatMatrix:
        return self.A + self.B

    def rank(self) -> int:
        """Rank of the game, the matrix rank of A + B."""
        return matrix_rank(self.payoff_sum)


@dataclass(frozen=True)
class RankOneGame:
    """The game (A, −A + a·bᵀ) given by A and the factorization (a, b)."""

    A: RatMatrix
    factorization: RankOneFactorization

    def __post_init__(self):
        if len(self.factorization.a) != self.A.rows or len(self.factorization.b) != self.A.cols:
            raise DimensionError(
                f"factorization lengths ({len(self.factorization.a)}, {len(self.factorization.b)}) "
                f"do not match {self.A.rows}x{self.A.cols}"
            )

    @classmethod
    def from_vectors(cls, A: RatMatrix, a: Sequence, b: Sequence) -> "RankOneGame":
        return cls(A, RankOneFactorization(vector(a), vector(b)))

    @property
    def a(self) -> Vector:
        return self.factorization.a

    @property
    def b(self) -> Vector:
        return self.factorization.b

    @property
    def B(self) -> RatMatrix:
        return -self.A + self.factorization.product()

    def to_game(self) -> Game:
        return Game(self.A, self.B)


def as_rank_one(game: Game) -> RankOneGame:
    """Factor A + B of a game of rank at most one; rank 0 gets a = 0, b = 0."""
    total = game.payoff_sum
    if total.is_zero():
        return RankOneGame(game.A, RankOneFactorization(zeros(game.m), zeros(game.n)))
    rank = matrix_rank(total)
    if rank > 1:
        raise RankError(f"rank(A+B) = {rank} > 1", rank=rank)
    return RankOneGame(game.A, factor_rank_one(total))


@dataclass(frozen=True)
class MixedProfile:
    """A pair of mixed strategies (x, y)."""

    x: Vector
    y: Vector

    @classmethod
    def of(cls, x: Sequence, y: Sequence) -> "MixedProfile":
        return cls(vector(x), vector(y))

    def is_valid(self) -> bool:
        return is_distribution(self.x) and is_distribution(self.y)

    def check_against(self, game: Game) -> None:
        if len(self.x) != game.m or len(self.y) != game.n:
            raise DimensionError(
                f"profile lengths ({len(self.x)}, {len(self.y)}) do not match {game.m}x{game.n}"
            )


@dataclass(frozen=True)
class EquilibriumRecord:
    """One equilibrium of a rank-1 game with its payoffs and λ = xᵀa."""

    profile: MixedProfile
    payoff_1: Fraction
    payoff_2: Fraction
    lam: Fraction
    iterations: int = 0


@dataclass(frozen=True)
class TrueInequalities:
    """
    Index sets of the inequalities that are strict somewhere on a face.

    rows: indices i with (Ay)_i + t < 0 at some point (0-based).
    cols: indices j with y_j > 0 at some point (0-based).
    """

    rows: FrozenSet[int]
    cols: FrozenSet[int]

    def issubset(self, other: "TrueInequalities") -> bool:
        return self.rows <= other.rows and self.cols <= other.cols


@dataclass(frozen=True)
class LambdaInterval:
    """Closed interval of λ values; None marks an infinite end."""

    lower: Optional[Fraction]
    upper: Optional[Fraction]

    def contains(self, lam: Fraction) -> bool:
        return (self.lower is None or self.lower <= lam) and (self.upper is None or lam <= self.upper)

    def is_point(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def interior_point(self) -> Fraction:
        """Some λ strictly inside the interval (the point itself if degenerate)."""
        if self.lower is None and self.upper is None:
            return Fraction(0)
        if self.lower is None:
            return self.upper - 1
        if self.upper is None:
            return self.lower + 1
        return (self.lower + self.upper) / 2


class SubsetKind(Enum):
    """Where a maximal Nash subset sits on the solution path."""
    BREAKPOINT = "breakpoint"
    INTERVAL = "interval"


@dataclass(frozen=True)
class NashSubset:
    """A maximal Nash subset conv(x_vertices) × conv(y_vertices)."""

    kind: SubsetKind
    lambda_set: LambdaInterval
    x_vertices: Tuple[Vector, ...]
    y_vertices: Tuple[Vector, ...]
    defining_trueineq: TrueInequalities
    segment_range: LambdaInterval = field(default=LambdaInterval(None, None))

    def extreme_pairs(self):
        return [(x, y) for x in self.x_vertices for y in self.y_vertices]
