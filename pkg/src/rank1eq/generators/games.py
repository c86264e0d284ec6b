"""
Game constructors: worked fixtures, the exponential family, the trade game
and seeded random rank-1 games.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.errors import UnknownFixture
from ..core.matrix import RatMatrix
from ..core.models import Game, RankOneGame
from ..core.rational import ZERO, Vector, to_fraction, vector, zeros

FIXTURE_NAMES = ("ex1", "ex3", "param-N2(λ)")

_PARAM_N2 = re.compile(r"^param-N2\((?P<lam>[^()]+)\)$")


@dataclass(frozen=True)
class ExpoParams:
    """Size n and base p > 2 of the exponential-equilibria game."""
    n: int
    p: Fraction = Fraction(3)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        object.__setattr__(self, 'p', to_fraction(self.p))
        if not self.p > 2:
            raise ValueError(f"p must exceed 2, got {self.p}")


def _expo_entry(p: Fraction, i: int, j: int) -> Fraction:
    # 1-based exponents
    if i == j:
        return p ** (i + j)
    if j > i:
        return 2 * p ** (i + j)
    return ZERO


def gen_expo(params: ExpoParams) -> Game:
    """
    The n×n game (A, Aᵀ) with 2ⁿ − 1 equilibria.

    a_ii = p^{2i}, a_ij = 2p^{i+j} above the diagonal, 0 below.
    """
    n, p = params.n, params.p
    A = RatMatrix.from_rows([[_expo_entry(p, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])
    return Game(A, A.T)


def expo_rank_one(params: ExpoParams) -> RankOneGame:
    """The exponential game with its natural factorization a_i = p^i, b_j = 2p^j."""
    game = gen_expo(params)
    a = [params.p ** i for i in range(1, params.n + 1)]
    b = [2 * params.p ** j for j in range(1, params.n + 1)]
    return RankOneGame.from_vectors(game.A, a, b)


@dataclass(frozen=True)
class TradeParams:
    """
    Seller quality levels, buyer quantity levels and prices of the trade game.

    Payoffs are p_ij − α a_i b_j + γ_j to the seller and
    −p_ij + β a_i b_j + δ_i to the buyer.
    """
    quality: Vector
    quantity: Vector
    prices: RatMatrix
    alpha: Fraction
    beta: Fraction
    gamma: Optional[Vector] = None
    delta: Optional[Vector] = None

    def __post_init__(self):
        object.__setattr__(self, 'quality', vector(self.quality))
        object.__setattr__(self, 'quantity', vector(self.quantity))
        object.__setattr__(self, 'alpha', to_fraction(self.alpha))
        object.__setattr__(self, 'beta', to_fraction(self.beta))
        m, n = len(self.quality), len(self.quantity)
        if self.prices.shape != (m, n):
            raise ValueError(f"prices must be {m}x{n}, got {self.prices.rows}x{self.prices.cols}")
        if not self.beta > self.alpha > 0:
            raise ValueError(f"need beta > alpha > 0, got alpha={self.alpha}, beta={self.beta}")
        object.__setattr__(self, 'gamma', zeros(n) if self.gamma is None else vector(self.gamma))
        object.__setattr__(self, 'delta', zeros(m) if self.delta is None else vector(self.delta))
        if len(self.gamma) != n or len(self.delta) != m:
            raise ValueError("gamma needs one entry per quantity level, delta one per quality level")


def _trade_matrices(params: TradeParams, gamma: Sequence[Fraction], delta: Sequence[Fraction]):
    m, n = len(params.quality), len(params.quantity)
    A, B = [], []
    for i in range(m):
        A.append([params.prices[i, j] - params.alpha * params.quality[i] * params.quantity[j] + gamma[j]
                  for j in range(n)])
        B.append([-params.prices[i, j] + params.beta * params.quality[i] * params.quantity[j] + delta[i]
                  for j in range(n)])
    return RatMatrix.from_rows(A), RatMatrix.from_rows(B)


def gen_trade(params: TradeParams) -> Tuple[Game, RankOneGame]:
    """
    The trade game and its strategically equivalent rank-1 reduction.

    γ_j only shifts the seller's column j and δ_i the buyer's row i, so dropping
    them leaves best responses unchanged; the reduced payoff sum is
    (β − α)·quality·quantityᵀ.
    """
    full = Game(*_trade_matrices(params, params.gamma, params.delta))
    m, n = len(params.quality), len(params.quantity)
    reduced_A, _ = _trade_matrices(params, zeros(n), zeros(m))
    surplus = params.beta - params.alpha
    reduced = RankOneGame.from_vectors(
        reduced_A, [surplus * q for q in params.quality], params.quantity
    )
    return full, reduced


def ex1() -> Game:
    return Game.from_rows([[1, 0], [0, 1]], [[1, -2], [-1, 0]])


def ex1_rank_one() -> RankOneGame:
    """ex1 with the factorization a = (2, −1), b = (1, −1)."""
    return RankOneGame.from_vectors(RatMatrix.from_rows([[1, 0], [0, 1]]), [2, -1], [1, -1])


def ex3() -> Game:
    """A rank-2 game whose only equilibrium is ((1,0),(1,0))."""
    return Game.from_rows([[1, -1], [0, 0]], [[1, 0], [2, 0]])


def param_n2(lam) -> Game:
    """The rank-1 game (A, C + 1λbᵀ) obtained from ex3 by dropping abᵀ, at a given λ."""
    lam = to_fraction(lam)
    return Game.from_rows([[1, -1], [0, 0]], [[4 + lam, 0], [lam, 0]])


def fixture(name: str) -> Game:
    """Look up a named fixture; ``param-N2(λ)`` takes any rational λ."""
    if name == "ex1":
        return ex1()
    if name == "ex3":
        return ex3()
    match = _PARAM_N2.match(name.strip())
    if match:
        return param_n2(match.group("lam"))
    raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def gen_random_rank1(m: int, n: int, bound: int = 9, seed: Optional[int] = None) -> RankOneGame:
    """
    Random integer game (A, −A + abᵀ) with entries of A, a, b in [−bound, bound].

    The same seed always yields the same game.
    """
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m}x{n}")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    rng = np.random.default_rng(seed)
    A = rng.integers(-bound, bound, size=(m, n), endpoint=True)
    a = rng.integers(-bound, bound, size=m, endpoint=True)
    b = rng.integers(-bound, bound, size=n, endpoint=True)
    return RankOneGame.from_vectors(
        RatMatrix.from_rows([[int(v) for v in row] for row in A]),
        [int(v) for v in a],
        [int(v) for v in b],
    )


def gen_random_game(m: int, n: int, bound: int = 9, seed: Optional[int] = None) -> Game:
    """Random integer bimatrix game of any rank."""
    rng = np.random.default_rng(seed)
    A = rng.integers(-bound, bound, size=(m, n), endpoint=True)
    B = rng.integers(-bound, bound, size=(m, n), endpoint=True)
    return Game.from_rows([[int(v) for v in row] for row in A], [[int(v) for v in row] for row in B])
