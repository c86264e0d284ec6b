"""
Exact equilibrium checks from the best-response conditions.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Tuple

from ..core.matrix import RatMatrix
from ..core.models import Game, MixedProfile
from ..core.rational import Vector, dot, ones, vscale


@dataclass(frozen=True)
class BestResponseCert:
    """Payoffs of each pure strategy against the opponent's mixed strategy."""

    payoff_vector: Vector
    best_value: Fraction
    support_ok: Tuple[bool, ...]

    @classmethod
    def build(cls, payoffs: Vector, strategy: Sequence[Fraction]) -> "BestResponseCert":
        best = max(payoffs)
        return cls(payoffs, best, tuple(s == 0 or p == best for s, p in zip(strategy, payoffs)))

    @property
    def holds(self) -> bool:
        return all(self.support_ok)

    def best_responses(self) -> Tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.payoff_vector) if p == self.best_value)


@dataclass(frozen=True)
class NashCheck:
    """Verdict of :func:`is_nash` with both players' certificates."""

    is_equilibrium: bool
    u: Fraction
    v: Fraction
    row: BestResponseCert
    col: BestResponseCert

    def __bool__(self) -> bool:
        return self.is_equilibrium


def _validate(game: Game, profile: MixedProfile) -> None:
    profile.check_against(game)
    if not profile.is_valid():
        raise ValueError("profile is not a pair of probability vectors")


def is_nash(game: Game, profile: MixedProfile) -> NashCheck:
    """
    Check that every pure strategy played with positive probability is a best
    response: x_i = 0 or (Ay)_i = u, and y_j = 0 or (Bᵀx)_j = v.
    """
    _validate(game, profile)
    row = BestResponseCert.build(game.A.matvec(profile.y), profile.x)
    col = BestResponseCert.build(game.B.vecmat(profile.x), profile.y)
    return NashCheck(row.holds and col.holds, row.best_value, col.best_value, row, col)


def qp_value(game: Game, profile: MixedProfile) -> Fraction:
    """xᵀ(A+B)y − u − v with u, v the best-response values; 0 exactly at equilibria."""
    _validate(game, profile)
    u = max(game.A.matvec(profile.y))
    v = max(game.B.vecmat(profile.x))
    return game.payoff_sum.bilinear(profile.x, profile.y) - u - v


class LemmaCheck(NamedTuple):
    """The three equivalent characterizations of a rank-1 equilibrium."""
    original: bool
    parameterized: bool
    shifted: bool

    def agree(self) -> bool:
        return self.original == self.parameterized == self.shifted


def check_lemma_equiv(
    A: RatMatrix, C: RatMatrix, a: Sequence[Fraction], b: Sequence[Fraction], profile: MixedProfile
) -> LemmaCheck:
    """
    Evaluate, with λ = xᵀa,

      (a) (x, y) is an equilibrium of (A, C + abᵀ)
      (b) (x, y) is an equilibrium of (A, C + 1λbᵀ)
      (c) (x, y) is an equilibrium of (A − 1λbᵀ, C + 1λbᵀ)

    independently of each other.
    """
    lam = dot(profile.x, a)
    lam_shift = RatMatrix.outer(ones(A.rows), vscale(lam, b))
    original = bool(is_nash(Game(A, C + RatMatrix.outer(a, b)), profile))
    parameterized = bool(is_nash(Game(A, C + lam_shift), profile))
    shifted = bool(is_nash(Game(A - lam_shift, C + lam_shift), profile))
    return LemmaCheck(original, parameterized, shifted)
