"""
True inequalities of a feasible system by a single LP.

For Gz ≤ g, Ez = e the LP

    maximize 1ᵀu  s.t.  Gz + u − gα ≤ 0,  Ez − eα = 0,  0 ≤ u ≤ 1,  α ≥ 1

has optimal u_i = 1 exactly for the inequalities that are strict somewhere on
the feasible set, and z/α is a point where all of them are strict at once.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Sequence, Tuple

from ..config import LpConfig
from ..core.errors import EmptyFace
from ..core.polytope import Halfspace
from ..core.rational import Vector
from .simplex import Constraint, LpProblem, Relation, Sense, solve


@dataclass(frozen=True)
class InteriorResult:
    true_indices: FrozenSet[int]
    point: Vector


def find_true_inequalities(
    nvars: int,
    inequalities: Sequence[Halfspace],
    equalities: Sequence[Halfspace],
    config: Optional[LpConfig] = None,
) -> InteriorResult:
    """
    Indices of the true inequalities and a relative-interior point.

    All variables are free; sign conditions belong in ``inequalities``.
    """
    k = len(inequalities)
    # variables: z (nvars, free), u (k), alpha
    total = nvars + k + 1
    alpha = nvars + k
    constraints = []
    for i, (coeffs, rhs) in enumerate(inequalities):
        row = [Fraction(0)] * total
        row[:nvars] = list(coeffs)
        row[nvars + i] = Fraction(1)
        row[alpha] = -Fraction(rhs)
        constraints.append(Constraint(tuple(row), Relation.LE, Fraction(0)))
    for coeffs, rhs in equalities:
        row = [Fraction(0)] * total
        row[:nvars] = list(coeffs)
        row[alpha] = -Fraction(rhs)
        constraints.append(Constraint(tuple(row), Relation.EQ, Fraction(0)))
    for i in range(k):
        row = [Fraction(0)] * total
        row[nvars + i] = Fraction(1)
        constraints.append(Constraint(tuple(row), Relation.LE, Fraction(1)))
    row = [Fraction(0)] * total
    row[alpha] = Fraction(1)
    constraints.append(Constraint(tuple(row), Relation.GE, Fraction(1)))

    objective = tuple([Fraction(0)] * nvars + [Fraction(1)] * k + [Fraction(0)])
    problem = LpProblem(objective, Sense.MAX, tuple(constraints), frozenset(range(nvars)))
    solution = solve(problem, config)
    if not solution.is_optimal:
        raise EmptyFace("system has no feasible point")

    u = solution.primal[nvars:alpha]
    scale = solution.primal[alpha]
    true_indices = frozenset(i for i, ui in enumerate(u) if ui == 1)
    point: Tuple[Fraction, ...] = tuple(zi / scale for zi in solution.primal[:nvars])
    return InteriorResult(true_indices, point)
