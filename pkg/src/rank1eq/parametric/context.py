"""
The λ-parameterized primal/dual pair of a rank-1 game.

    D_λ:  maximize λbᵀy + t  s.t.  Ay + 1t ≤ 0,  1ᵀy = 1,  y ≥ 0
    P_λ:  minimize v         s.t.  Aᵀx + 1v − s = bλ,  1ᵀx = 1,  x, s ≥ 0

Optimal solutions of the pair are the equilibria of the zero-sum game
(A, −A + 1λbᵀ). P_λ's multipliers are an optimal (y, t) of D_λ, so one solve
yields both sides.

Two variable layouts are used throughout the package:
D-space (y_1..y_n, t) and P-space (λ, x_1..x_m, v, s_1..s_n).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from ..config import LpConfig
from ..core.errors import DimensionError
from ..core.matrix import RatMatrix
from ..core.models import RankOneGame, TrueInequalities
from ..core.polytope import Halfspace
from ..core.rational import ONE, ZERO, Vector
from ..lp.simplex import Constraint, LpProblem, LpSolution, Relation, Sense, solve


@dataclass(frozen=True)
class ParamContext:
    """Fixed data (A, b) of the parameterized pair, plus the LP settings."""

    A: RatMatrix
    b: Vector
    lp_config: LpConfig = field(default_factory=LpConfig, compare=False)

    def __post_init__(self):
        if len(self.b) != self.A.cols:
            raise DimensionError(f"b has length {len(self.b)}, A has {self.A.cols} columns")

    @classmethod
    def for_game(cls, game: RankOneGame, lp_config: Optional[LpConfig] = None) -> "ParamContext":
        return cls(game.A, game.b, lp_config or LpConfig())

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    # D-space: (y, t)
    @property
    def d_size(self) -> int:
        return self.n + 1

    # P-space: (λ, x, v, s)
    @property
    def p_size(self) -> int:
        return self.m + self.n + 2

    def x_index(self, i: int) -> int:
        return 1 + i

    @property
    def v_index(self) -> int:
        return 1 + self.m

    def s_index(self, j: int) -> int:
        return 2 + self.m + j

    def solve(self, problem: LpProblem) -> LpSolution:
        return solve(problem, self.lp_config)


@dataclass(frozen=True)
class ParamOptimum:
    """Optimal solutions of both P_λ and D_λ at one λ."""

    lam: Fraction
    x: Vector
    v: Fraction
    s: Vector
    y: Vector
    t: Fraction

    @property
    def phi(self) -> Fraction:
        return self.v


@dataclass(frozen=True)
class FacePoint:
    """A point (λ, x, v, s) of P-space."""

    lam: Fraction
    x: Vector
    v: Fraction
    s: Vector


def _p_lambda_problem(ctx: ParamContext, lam: Fraction) -> LpProblem:
    m, n = ctx.m, ctx.n
    constraints = []
    # variables (x, v, s)
    for j in range(n):
        row = list(ctx.A.column(j)) + [ONE] + [(-ONE if k == j else ZERO) for k in range(n)]
        constraints.append(Constraint(tuple(row), Relation.EQ, ctx.b[j] * lam))
    constraints.append(Constraint((ONE,) * m + (ZERO,) * (n + 1), Relation.EQ, ONE))
    objective = (ZERO,) * m + (ONE,) + (ZERO,) * n
    return LpProblem(objective, Sense.MIN, tuple(constraints), frozenset({m}))


def solve_P(ctx: ParamContext, lam) -> LpSolution:
    """Solve P_λ; the primal is (x, v, s), the dual is (y, t)."""
    solution = ctx.solve(_p_lambda_problem(ctx, Fraction(lam)))
    # P_λ is always feasible and bounded (it is a zero-sum game in LP form)
    assert solution.is_optimal
    return solution


def solve_param(ctx: ParamContext, lam) -> ParamOptimum:
    """Solve P_λ and split primal and dual into named parts."""
    lam = Fraction(lam)
    m, n = ctx.m, ctx.n
    solution = solve_P(ctx, lam)
    primal, dual = solution.primal, solution.dual
    return ParamOptimum(
        lam=lam,
        x=primal[:m],
        v=primal[m],
        s=primal[m + 1:m + 1 + n],
        y=dual[:n],
        t=dual[n],
    )


def phi(ctx: ParamContext, lam) -> Fraction:
    """Optimal value φ(λ) of the pair."""
    return solve_P(ctx, lam).objective_value


def d_inequalities(ctx: ParamContext) -> List[Halfspace]:
    """D's inequalities in D-space: rows (Ay)_i + t ≤ 0, then −y_j ≤ 0."""
    m, n = ctx.m, ctx.n
    rows: List[Halfspace] = [(ctx.A.row(i) + (ONE,), ZERO) for i in range(m)]
    for j in range(n):
        rows.append((tuple(-ONE if k == j else ZERO for k in range(n)) + (ZERO,), ZERO))
    return rows


def d_equalities(ctx: ParamContext, lam: Fraction, phi_value: Fraction,
                 slope: Optional[Fraction] = None) -> List[Halfspace]:
    """1ᵀy = 1 and λbᵀy + t = φ(λ), optionally with bᵀy = slope."""
    n = ctx.n
    eqs: List[Halfspace] = [
        ((ONE,) * n + (ZERO,), ONE),
        (tuple(lam * bj for bj in ctx.b) + (ONE,), phi_value),
    ]
    if slope is not None:
        eqs.append((tuple(ctx.b) + (ZERO,), slope))
    return eqs


def tineq_from_indices(ctx: ParamContext, indices) -> TrueInequalities:
    """Split indices of :func:`d_inequalities` into row and column sets."""
    m = ctx.m
    return TrueInequalities(
        rows=frozenset(i for i in indices if i < m),
        cols=frozenset(i - m for i in indices if i >= m),
    )


def face_constraints(ctx: ParamContext, tineq: TrueInequalities) -> List[Constraint]:
    """
    P(M, N) in P-space: Aᵀx + 1v − s − bλ = 0, 1ᵀx = 1, x_M = 0, s_N = 0.

    λ and v are free; x and s are nonnegative.
    """
    m, n = ctx.m, ctx.n
    size = ctx.p_size
    constraints = []
    for j in range(n):
        row = [ZERO] * size
        row[0] = -ctx.b[j]
        for i in range(m):
            row[ctx.x_index(i)] = ctx.A[i, j]
        row[ctx.v_index] = ONE
        row[ctx.s_index(j)] = -ONE
        constraints.append(Constraint(tuple(row), Relation.EQ, ZERO))
    row = [ZERO] * size
    for i in range(m):
        row[ctx.x_index(i)] = ONE
    constraints.append(Constraint(tuple(row), Relation.EQ, ONE))
    for i in sorted(tineq.rows):
        row = [ZERO] * size
        row[ctx.x_index(i)] = ONE
        constraints.append(Constraint(tuple(row), Relation.EQ, ZERO))
    for j in sorted(tineq.cols):
        row = [ZERO] * size
        row[ctx.s_index(j)] = ONE
        constraints.append(Constraint(tuple(row), Relation.EQ, ZERO))
    return constraints


def p_space_free(ctx: ParamContext) -> frozenset:
    return frozenset({0, ctx.v_index})


def p_space_row(ctx: ParamContext, lam_coef, a_coefs: Optional[Sequence[Fraction]] = None) -> List[Fraction]:
    """A P-space coefficient row with λ coefficient ``lam_coef`` and x coefficients ``a_coefs``."""
    row = [ZERO] * ctx.p_size
    row[0] = Fraction(lam_coef)
    if a_coefs is not None:
        for i, ai in enumerate(a_coefs):
            row[ctx.x_index(i)] = ai
    return row


def face_point(ctx: ParamContext, solution: LpSolution) -> FacePoint:
    """Decode a P-space primal solution."""
    z = solution.primal
    m, n = ctx.m, ctx.n
    return FacePoint(
        lam=z[0],
        x=tuple(z[1:1 + m]),
        v=z[1 + m],
        s=tuple(z[2 + m:2 + m + n]),
    )
