"""
Exact two-phase primal simplex with Bland's least-index rule.

Every LP of the suite goes through :func:`solve`. Arithmetic is done on
``fractions.Fraction`` so optimal values, primal points and dual multipliers
are exact, and strong duality can be checked with ``==``.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Tuple

from ..config import LpConfig
from ..core.errors import CertificateError, DimensionError
from ..core.rational import ZERO, Vector, dot, vector
from ..utils.metrics import record_lp_solve

logger = logging.getLogger(__name__)


class Sense(Enum):
    MIN = "min"
    MAX = "max"


class Relation(Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: Vector
    relation: Relation
    rhs: Fraction

    @classmethod
    def of(cls, coeffs: Sequence, relation: Relation, rhs=0) -> "Constraint":
        return cls(vector(coeffs), relation, Fraction(rhs))


@dataclass(frozen=True)
class LpProblem:
    """
    Optimize objective·z subject to the constraints.

    Variables listed in ``free`` have lower bound −∞, all others are ≥ 0.
    """

    objective: Vector
    sense: Sense
    constraints: Tuple[Constraint, ...]
    free: FrozenSet[int] = frozenset()

    def __post_init__(self):
        nvars = len(self.objective)
        if nvars == 0:
            raise DimensionError("an LP needs at least one variable")
        for k, con in enumerate(self.constraints):
            if len(con.coeffs) != nvars:
                raise DimensionError(
                    f"constraint {k} has {len(con.coeffs)} coefficients, expected {nvars}"
                )
        if any(not 0 <= j < nvars for j in self.free):
            raise DimensionError("free variable index out of range")

    @property
    def nvars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    """
    Result of a solve.

    For an optimal solution the dual has one multiplier per constraint with
    objective_value = Σ dual_i·rhs_i. Sign convention: for a minimization,
    ≤ rows carry y_i ≤ 0 and ≥ rows y_i ≥ 0; for a maximization the signs
    flip; equality rows are free. ``basis`` lists the original variables that
    are basic in the final tableau.
    """

    status: LpStatus
    primal: Vector = ()
    dual: Vector = ()
    objective_value: Optional[Fraction] = None
    basis: FrozenSet[int] = frozenset()
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class LpIterationLimit(RuntimeError):
    """Pivot budget exhausted."""


@dataclass
class _StandardForm:
    """min cost·z, rows·z = rhs, z ≥ 0 with rhs ≥ 0, plus the maps back."""

    rows: List[List[Fraction]]
    rhs: List[Fraction]
    cost: List[Fraction]
    # column -> (original variable, sign) for structural columns
    columns: List[Tuple[int, int]] = field(default_factory=list)
    row_sign: List[int] = field(default_factory=list)
    sense_sign: int = 1

    @property
    def nstruct(self) -> int:
        return len(self.cost)


def _standard_form(problem: LpProblem) -> _StandardForm:
    sense_sign = 1 if problem.sense is Sense.MIN else -1
    columns: List[Tuple[int, int]] = []
    for j in range(problem.nvars):
        columns.append((j, 1))
        if j in problem.free:
            columns.append((j, -1))
    nslack = sum(1 for c in problem.constraints if c.relation is not Relation.EQ)
    width = len(columns) + nslack

    rows, rhs, row_sign = [], [], []
    slack = len(columns)
    for con in problem.constraints:
        row = [sign * con.coeffs[j] for j, sign in columns] + [ZERO] * nslack
        if con.relation is Relation.LE:
            row[slack] = Fraction(1)
            slack += 1
        elif con.relation is Relation.GE:
            row[slack] = Fraction(-1)
            slack += 1
        sigma = -1 if con.rhs < 0 else 1
        rows.append([sigma * v for v in row] if sigma < 0 else row)
        rhs.append(sigma * con.rhs)
        row_sign.append(sigma)

    cost = [sense_sign * sign * problem.objective[j] for j, sign in columns] + [ZERO] * nslack
    assert len(cost) == width
    return _StandardForm(rows, rhs, cost, columns, row_sign, sense_sign)


class SimplexSolver:
    """
    Dense-tableau simplex. Artificial columns stay in the tableau for the whole
    solve; their block holds B⁻¹, from which the duals are read.
    """

    def __init__(self, config: Optional[LpConfig] = None):
        self.config = config or LpConfig()
        self.logger = logging.getLogger(__name__)

    def solve(self, problem: LpProblem) -> LpSolution:
        sf = _standard_form(problem)
        nrows, nstruct = len(sf.rows), sf.nstruct
        width = nstruct + nrows
        tableau = [
            sf.rows[i] + [Fraction(1) if k == i else ZERO for k in range(nrows)] + [sf.rhs[i]]
            for i in range(nrows)
        ]
        basis = [nstruct + i for i in range(nrows)]
        self._pivots = 0

        # Phase 1: minimize the sum of artificials
        phase1_cost = [ZERO] * nstruct + [Fraction(1)] * nrows
        obj = self._objective_row(tableau, basis, phase1_cost, width)
        self._run(tableau, obj, basis, range(nstruct))
        if obj[width] != 0:
            solution = LpSolution(LpStatus.INFEASIBLE, pivots=self._pivots)
            record_lp_solve(solution.status.value, self._pivots)
            return solution

        # Drive zero-level artificials out where a structural pivot exists;
        # a row with none left is redundant and keeps its artificial at 0.
        for r in range(nrows):
            if basis[r] >= nstruct:
                col = next((k for k in range(nstruct) if tableau[r][k] != 0), None)
                if col is not None:
                    self._pivot(tableau, obj, basis, r, col)

        # Phase 2
        phase2_cost = list(sf.cost) + [ZERO] * nrows
        obj = self._objective_row(tableau, basis, phase2_cost, width)
        bounded = self._run(tableau, obj, basis, range(nstruct))
        if not bounded:
            solution = LpSolution(LpStatus.UNBOUNDED, pivots=self._pivots)
            record_lp_solve(solution.status.value, self._pivots)
            return solution

        solution = self._extract(problem, sf, tableau, basis, phase2_cost, obj[width])
        record_lp_solve(solution.status.value, self._pivots)
        if self.config.verify_certificates:
            violations = check_certificates(problem, solution)
            if violations:
                raise CertificateError("; ".join(violations))
        return solution

    @staticmethod
    def _objective_row(tableau, basis, cost, width) -> List[Fraction]:
        """Reduced costs in columns 0..width-1, minus the objective value last."""
        obj = list(cost) + [ZERO]
        for r, b in enumerate(basis):
            cb = cost[b]
            if cb:
                row = tableau[r]
                for k in range(width + 1):
                    if row[k]:
                        obj[k] -= cb * row[k]
        return obj

    def _pivot(self, tableau, obj, basis, r, c) -> None:
        prow = tableau[r]
        pv = prow[c]
        if pv != 1:
            prow[:] = [v / pv for v in prow]
        nonzero = [k for k, v in enumerate(prow) if v]
        for i, row in enumerate(tableau):
            if i != r:
                f = row[c]
                if f:
                    for k in nonzero:
                        row[k] -= f * prow[k]
        f = obj[c]
        if f:
            for k in nonzero:
                obj[k] -= f * prow[k]
        basis[r] = c
        self._pivots += 1
        if self._pivots > self.config.max_pivots:
            raise LpIterationLimit(f"simplex exceeded {self.config.max_pivots} pivots")

    def _run(self, tableau, obj, basis, eligible) -> bool:
        """Pivot to optimality with Bland's rule; False means unbounded."""
        eligible = list(eligible)
        while True:
            entering = next((k for k in eligible if obj[k] < 0), None)
            if entering is None:
                return True
            leave, best = None, None
            for r, row in enumerate(tableau):
                coef = row[entering]
                if coef > 0:
                    ratio = row[-1] / coef
                    if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                        leave, best = r, ratio
            if leave is None:
                return False
            self._pivot(tableau, obj, basis, leave, entering)

    def _extract(self, problem, sf, tableau, basis, cost, neg_value) -> LpSolution:
        nstruct = sf.nstruct
        nrows = len(tableau)
        z = [ZERO] * nstruct
        for r, b in enumerate(basis):
            if b < nstruct:
                z[b] = tableau[r][-1]

        primal = [ZERO] * problem.nvars
        basic_vars = set()
        basic_cols = set(basis)
        for col, (j, sign) in enumerate(sf.columns):
            primal[j] += sign * z[col]
            if col in basic_cols:
                basic_vars.add(j)

        dual = []
        for i in range(nrows):
            y_std = sum((cost[b] * tableau[r][nstruct + i] for r, b in enumerate(basis) if cost[b]), ZERO)
            dual.append(sf.sense_sign * sf.row_sign[i] * y_std)

        value = sf.sense_sign * -neg_value
        return LpSolution(
            status=LpStatus.OPTIMAL,
            primal=tuple(primal),
            dual=tuple(dual),
            objective_value=value,
            basis=frozenset(basic_vars),
            pivots=self._pivots,
        )


def check_certificates(problem: LpProblem, solution: LpSolution) -> List[str]:
    """
    Exact optimality certificate check; returns the list of violations.

    Checks primal feasibility, dual sign conditions, reduced-cost signs, strong
    duality and complementary slackness.
    """
    if not solution.is_optimal:
        return []
    x, y = solution.primal, solution.dual
    maximize = problem.sense is Sense.MAX
    problems: List[str] = []

    for j, xj in enumerate(x):
        if j not in problem.free and xj < 0:
            problems.append(f"variable {j} negative")

    for i, con in enumerate(problem.constraints):
        lhs = dot(con.coeffs, x)
        slack = con.rhs - lhs
        if con.relation is Relation.LE and slack < 0:
            problems.append(f"row {i} violated")
        elif con.relation is Relation.GE and slack > 0:
            problems.append(f"row {i} violated")
        elif con.relation is Relation.EQ and slack != 0:
            problems.append(f"row {i} violated")
        if con.relation is not Relation.EQ:
            nonneg = (con.relation is Relation.GE) != maximize
            if (nonneg and y[i] < 0) or (not nonneg and y[i] > 0):
                problems.append(f"dual {i} has wrong sign")
        if y[i] * slack != 0:
            problems.append(f"complementary slackness fails on row {i}")

    for j in range(problem.nvars):
        reduced = problem.objective[j] - sum(
            (y[i] * con.coeffs[j] for i, con in enumerate(problem.constraints) if con.coeffs[j]), ZERO
        )
        if j in problem.free:
            if reduced != 0:
                problems.append(f"reduced cost of free variable {j} nonzero")
            continue
        if (reduced < 0 and not maximize) or (reduced > 0 and maximize):
            problems.append(f"reduced cost of variable {j} has wrong sign")
        if x[j] * reduced != 0:
            problems.append(f"complementary slackness fails on variable {j}")

    primal_value = dot(problem.objective, x)
    dual_value = sum((yi * con.rhs for yi, con in zip(y, problem.constraints)), ZERO)
    if primal_value != solution.objective_value or dual_value != primal_value:
        problems.append(f"duality gap: primal {primal_value}, dual {dual_value}")
    return problems


def solve(problem: LpProblem, config: Optional[LpConfig] = None) -> LpSolution:
    """Solve an LP exactly; every outcome is encoded in the status."""
    return SimplexSolver(config).solve(problem)
