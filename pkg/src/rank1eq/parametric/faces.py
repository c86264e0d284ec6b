"""
Optimal faces of the parameterized pair and the LPs over them.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..core.errors import EmptyFace
from ..core.models import TrueInequalities
from ..core.rational import ZERO, Vector
from ..lp.interior import find_true_inequalities
from ..lp.simplex import Constraint, LpProblem, LpSolution, LpStatus, Relation, Sense
from .context import (
    ParamContext,
    d_equalities,
    d_inequalities,
    face_constraints,
    p_space_free,
    p_space_row,
    tineq_from_indices,
)

logger = logging.getLogger(__name__)


class Direction(Enum):
    MIN = "min"
    MAX = "max"

    @property
    def sense(self) -> Sense:
        return Sense.MIN if self is Direction.MIN else Sense.MAX


def y_face_true_inequalities(
    ctx: ParamContext, lam, phi_value, slope: Optional[Fraction] = None
) -> Tuple[TrueInequalities, Vector]:
    """
    True inequalities of Y(λ), or of its subface where bᵀy = slope.

    Also returns a relative-interior point (y, t) of that face.
    """
    result = find_true_inequalities(
        ctx.d_size,
        d_inequalities(ctx),
        d_equalities(ctx, Fraction(lam), Fraction(phi_value), slope),
        ctx.lp_config,
    )
    return tineq_from_indices(ctx, result.true_indices), result.point


def true_inequalities(ctx: ParamContext, lam, phi_value) -> TrueInequalities:
    """
    The sets M(λ) and N(λ).

    M(λ) holds the rows with (Ay)_i + t < 0 somewhere on Y(λ), N(λ) the
    columns with y_j > 0 somewhere on Y(λ).
    """
    tineq, _ = y_face_true_inequalities(ctx, lam, phi_value)
    return tineq


def sl_lp(ctx: ParamContext, lam, phi_value, sense: Direction) -> LpSolution:
    """Minimize or maximize bᵀy over Y(λ); the optimum is φ′₋(λ) or φ′₊(λ)."""
    n = ctx.n
    constraints = [Constraint(tuple(coeffs), Relation.LE, rhs) for coeffs, rhs in d_inequalities(ctx)[:ctx.m]]
    constraints += [
        Constraint(tuple(coeffs), Relation.EQ, rhs)
        for coeffs, rhs in d_equalities(ctx, Fraction(lam), Fraction(phi_value))
    ]
    objective = tuple(ctx.b) + (ZERO,)
    solution = ctx.solve(LpProblem(objective, sense.sense, tuple(constraints), frozenset({n})))
    if not solution.is_optimal:
        raise EmptyFace(f"Y({lam}) is empty; phi value {phi_value} is not optimal")
    return solution


def br_lp_solution(ctx: ParamContext, tineq: TrueInequalities, sense: Direction) -> LpSolution:
    """Optimize λ over P(M, N)."""
    objective = tuple(p_space_row(ctx, 1))
    problem = LpProblem(objective, sense.sense, tuple(face_constraints(ctx, tineq)), p_space_free(ctx))
    solution = ctx.solve(problem)
    if solution.status is LpStatus.INFEASIBLE:
        raise EmptyFace(f"P(M={sorted(tineq.rows)}, N={sorted(tineq.cols)}) is empty")
    return solution


def br_lp(ctx: ParamContext, tineq: TrueInequalities, sense: Direction) -> Optional[Fraction]:
    """
    Adjacent breakpoint of the segment with true inequalities (M, N).

    Returns None when λ is unbounded in that direction.
    """
    solution = br_lp_solution(ctx, tineq, sense)
    if solution.status is LpStatus.UNBOUNDED:
        return None
    return solution.objective_value


def q_lp(
    ctx: ParamContext,
    tineq: TrueInequalities,
    a: Sequence[Fraction],
    lambda_prime,
    sense: Direction,
) -> LpSolution:
    """
    Look for the hyperplane xᵀa = λ along a segment.

    MAX:  maximize λ − xᵀa  over P(M, N) with xᵀa ≥ λ ≥ λ′
    MIN:  minimize λ − xᵀa  over P(M, N) with xᵀa ≤ λ ≤ λ′

    An optimum of 0 means the segment meets the hyperplane on that side of λ′.
    """
    lambda_prime = Fraction(lambda_prime)
    constraints = list(face_constraints(ctx, tineq))
    gap = tuple(p_space_row(ctx, 1, [-ai for ai in a]))  # λ − xᵀa
    lam_only = tuple(p_space_row(ctx, 1))
    if sense is Direction.MAX:
        constraints.append(Constraint(gap, Relation.LE, ZERO))
        constraints.append(Constraint(lam_only, Relation.GE, lambda_prime))
    else:
        constraints.append(Constraint(gap, Relation.GE, ZERO))
        constraints.append(Constraint(lam_only, Relation.LE, lambda_prime))
    problem = LpProblem(gap, sense.sense, tuple(constraints), p_space_free(ctx))
    return ctx.solve(problem)


def hyperplane_solution(
    ctx: ParamContext, tineq: TrueInequalities, a: Sequence[Fraction], sense: Direction
) -> LpSolution:
    """Optimize λ over P(M, N) intersected with xᵀa = λ."""
    constraints = list(face_constraints(ctx, tineq))
    constraints.append(Constraint(tuple(p_space_row(ctx, 1, [-ai for ai in a])), Relation.EQ, ZERO))
    objective = tuple(p_space_row(ctx, 1))
    return ctx.solve(LpProblem(objective, sense.sense, tuple(constraints), p_space_free(ctx)))


def lambda_extreme(
    ctx: ParamContext, tineq: TrueInequalities, a: Sequence[Fraction], sense: Direction
) -> Optional[Fraction]:
    """Smallest or largest λ on P(M, N) ∩ {xᵀa = λ}; None if the intersection is empty."""
    solution = hyperplane_solution(ctx, tineq, a, sense)
    if solution.status is LpStatus.INFEASIBLE:
        return None
    # xᵀa = λ bounds λ by the range of a
    assert solution.is_optimal
    return solution.objective_value
