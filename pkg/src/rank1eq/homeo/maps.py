"""
Homeomorphisms between games and their equilibrium graph.

``km_*`` is the Kohlberg-Mertens map, which moves the row averages of A and
the column averages of B. ``psi_*`` moves only the centered parts of those
averages and keeps A + B = M fixed, so it maps games of a given rank to
equilibria of games of that same rank.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from ..core.errors import NotAnEquilibrium, SumMismatch
from ..core.matrix import RatMatrix
from ..core.models import Game, MixedProfile
from ..core.rational import ONE, Vector, center, mean, ones, vadd, vector, vsub
from ..oracle.verify import is_nash

logger = logging.getLogger(__name__)


class GamePair(NamedTuple):
    C: RatMatrix
    D: RatMatrix


class EquilibriumPoint(NamedTuple):
    A: RatMatrix
    B: RatMatrix
    x: Vector
    y: Vector


@dataclass(frozen=True)
class WaterLevelResult:
    """c = p + x with x on the simplex and x_i > 0 only where p_i = level = max p."""

    x: Vector
    p: Vector
    level: Fraction


def water_level(c: Sequence) -> WaterLevelResult:
    """
    The lowest level w with Σ(c_i − w)⁺ ≤ 1, and x_i = (c_i − w)⁺.

    Scans c in descending order for the first prefix whose level does not
    exceed the next entry.
    """
    c = vector(c)
    if not c:
        raise ValueError("water_level needs a nonempty vector")
    ordered = sorted(c, reverse=True)
    running = Fraction(0)
    level = None
    for k, ck in enumerate(ordered, start=1):
        running += ck
        w = (running - ONE) / k
        if k == len(ordered) or ordered[k] <= w:
            level = w
            break
    x = tuple(max(ci - level, Fraction(0)) for ci in c)
    return WaterLevelResult(x, vsub(c, x), level)


def _row_means(A: RatMatrix) -> Vector:
    return tuple(s / A.cols for s in A.row_sums())


def _column_means(A: RatMatrix) -> Vector:
    return tuple(s / A.rows for s in A.column_sums())


@dataclass(frozen=True)
class KmDecomposition:
    """
    A = Ã + a1ᵀ and B = B̃ + 1bᵀ, with Ã having zero row sums and B̃ zero column sums.

    a holds the row averages of A, b the column averages of B.
    """

    base_A: RatMatrix
    base_B: RatMatrix
    a: Vector
    b: Vector

    def reassemble(self) -> Game:
        A = self.base_A + RatMatrix.outer(self.a, ones(self.base_A.cols))
        B = self.base_B + RatMatrix.outer(ones(self.base_B.rows), self.b)
        return Game(A, B)


def km_decompose(A: RatMatrix, B: RatMatrix) -> KmDecomposition:
    a = _row_means(A)
    b = _column_means(B)
    return KmDecomposition(
        A - RatMatrix.outer(a, ones(A.cols)),
        B - RatMatrix.outer(ones(B.rows), b),
        a,
        b,
    )


def _require_equilibrium(A: RatMatrix, B: RatMatrix, x, y) -> MixedProfile:
    profile = MixedProfile.of(x, y)
    if not is_nash(Game(A, B), profile):
        raise NotAnEquilibrium("the profile is not a Nash equilibrium of (A, B)")
    return profile


def km_inverse(A: RatMatrix, B: RatMatrix, x, y) -> GamePair:
    """(A, B, x, y) ↦ (C, D) = (Ã + (Ay + x)1ᵀ, B̃ + 1(Bᵀx + y)ᵀ)."""
    profile = _require_equilibrium(A, B, x, y)
    dec = km_decompose(A, B)
    c = vadd(A.matvec(profile.y), profile.x)
    d = vadd(B.vecmat(profile.x), profile.y)
    C = dec.base_A + RatMatrix.outer(c, ones(A.cols))
    D = dec.base_B + RatMatrix.outer(ones(B.rows), d)
    return GamePair(C, D)


def km_forward(C: RatMatrix, D: RatMatrix) -> EquilibriumPoint:
    """(C, D) ↦ (A, B, x, y); (x, y) is always an equilibrium of (A, B)."""
    dec = km_decompose(C, D)
    c, d = dec.a, dec.b
    x = water_level(c).x
    y = water_level(d).x
    a = vsub(vsub(c, x), dec.base_A.matvec(y))
    b = vsub(vsub(d, y), dec.base_B.vecmat(x))
    game = KmDecomposition(dec.base_A, dec.base_B, a, b).reassemble()
    return EquilibriumPoint(game.A, game.B, x, y)


def rho(v: Sequence[Fraction]) -> Vector:
    """Projection of R^m onto the hyperplane 1ᵀz = 0."""
    return center(v)


def sigma(v: Sequence[Fraction]) -> Vector:
    """Projection of R^n onto the hyperplane 1ᵀz = 0."""
    return center(v)


@dataclass(frozen=True)
class PsiDecomposition:
    """
    A = Â + γ11ᵀ + a1ᵀ + 1bᵀ with Â doubly centered, 1ᵀa = 0 and 1ᵀb = 0.
    """

    hat: RatMatrix
    gamma: Fraction
    a: Vector
    b: Vector

    def constraints_hold(self) -> bool:
        zero_rows = all(s == 0 for s in self.hat.row_sums())
        zero_cols = all(s == 0 for s in self.hat.column_sums())
        return zero_rows and zero_cols and sum(self.a) == 0 and sum(self.b) == 0


def psi_decompose(A: RatMatrix) -> PsiDecomposition:
    gamma = mean(A.row_sums()) / A.cols
    a = tuple(r - gamma for r in _row_means(A))
    b = tuple(s - gamma for s in _column_means(A))
    hat = A - psi_reassemble(PsiDecomposition(RatMatrix.zeros(A.rows, A.cols), gamma, a, b))
    return PsiDecomposition(hat, gamma, a, b)


def psi_reassemble(dec: PsiDecomposition) -> RatMatrix:
    m, n = dec.hat.shape
    return (
        dec.hat
        + RatMatrix.outer(ones(m), ones(n)).scale(dec.gamma)
        + RatMatrix.outer(dec.a, ones(n))
        + RatMatrix.outer(ones(m), dec.b)
    )


def _require_sum(C: RatMatrix, D: RatMatrix, M: RatMatrix) -> None:
    if C.shape != M.shape or D.shape != M.shape or C + D != M:
        raise SumMismatch("payoff matrices do not add up to M")


def psi_inverse(
    A: RatMatrix, B: RatMatrix, x, y, M: Optional[RatMatrix] = None
) -> GamePair:
    """
    (A, B, x, y) ↦ (C, D) with C + D = A + B.

    C keeps Â and γ of A; its row and column offsets become ρ(Ay + x) and σ(Bᵀx + y).
    """
    if M is None:
        M = A + B
    _require_sum(A, B, M)
    profile = _require_equilibrium(A, B, x, y)
    dec = psi_decompose(A)
    c = rho(vadd(A.matvec(profile.y), profile.x))
    d = sigma(vadd(B.vecmat(profile.x), profile.y))
    C = psi_reassemble(PsiDecomposition(dec.hat, dec.gamma, c, d))
    return GamePair(C, M - C)


def psi_forward(C: RatMatrix, D: RatMatrix, M: RatMatrix) -> EquilibriumPoint:
    """(C, D) ↦ (A, B, x, y) with A + B = M and (x, y) an equilibrium of (A, B)."""
    _require_sum(C, D, M)
    dec = psi_decompose(C)
    x = water_level(dec.a).x
    y = water_level(dec.b).x
    a = vsub(dec.a, rho(vadd(dec.hat.matvec(y), x)))
    b = vsub(sigma(vadd((M - dec.hat).vecmat(x), y)), dec.b)
    A = psi_reassemble(PsiDecomposition(dec.hat, dec.gamma, a, b))
    logger.debug(f"psi maps a {M.rows}x{M.cols} game to equilibrium x={x}, y={y}")
    return EquilibriumPoint(A, M - A, x, y)
