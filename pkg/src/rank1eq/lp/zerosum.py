"""
Minmax strategies of zero-sum games (M, −M) from one LP and its dual.
"""

from fractions import Fraction
from typing import Optional, Tuple

from ..config import LpConfig
from ..core.matrix import RatMatrix
from ..core.rational import Vector
from .simplex import Constraint, LpProblem, Relation, Sense, solve


def solve_zero_sum(M: RatMatrix, config: Optional[LpConfig] = None) -> Tuple[Vector, Vector, Fraction]:
    """
    Solve maximize u s.t. My + 1u ≤ 0, 1ᵀy = 1, y ≥ 0.

    y is a minmax strategy of the column player, the multipliers of the rows
    of My + 1u ≤ 0 form the row player's maxmin strategy x, and the game value
    to the row player is −u.
    """
    m, n = M.rows, M.cols
    constraints = [
        Constraint(M.row(i) + (Fraction(1),), Relation.LE, Fraction(0)) for i in range(m)
    ]
    constraints.append(Constraint((Fraction(1),) * n + (Fraction(0),), Relation.EQ, Fraction(1)))
    objective = (Fraction(0),) * n + (Fraction(1),)
    solution = solve(LpProblem(objective, Sense.MAX, tuple(constraints), frozenset({n})), config)
    # always feasible and bounded: u ≤ −max_i (My)_i
    assert solution.is_optimal
    y = solution.primal[:n]
    x = solution.dual[:m]
    return x, y, -solution.objective_value
