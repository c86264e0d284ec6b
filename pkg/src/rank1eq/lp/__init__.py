"""
Exact linear programming.
"""

from .interior import InteriorResult, find_true_inequalities
from .simplex import (
    Constraint,
    LpProblem,
    LpSolution,
    LpStatus,
    Relation,
    Sense,
    SimplexSolver,
    check_certificates,
    solve,
)
from .zerosum import solve_zero_sum

__all__ = [
    "Constraint", "LpProblem", "LpSolution", "LpStatus", "Relation", "Sense",
    "SimplexSolver", "check_certificates", "solve", "solve_zero_sum",
    "InteriorResult", "find_true_inequalities",
]
