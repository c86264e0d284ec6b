"""
Binary search over λ for one exact equilibrium of a rank-1 game.

The equilibria of (A, −A + abᵀ) are the points of the solution path of the
parameterized pair that lie on the hyperplane xᵀa = λ. The search keeps
λ_lo ≤ x_loᵀa and x_hiᵀa ≤ λ_hi for points of the path at both ends; each
step either finds the hyperplane on the segment through the midpoint or
moves one end to the next breakpoint beyond it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..config import LpConfig, SearchConfig
from ..core.errors import SearchDiverged
from ..core.matrix import RatMatrix
from ..core.models import EquilibriumRecord, Game, MixedProfile, RankOneGame
from ..core.rational import Vector, dot, ones, vscale
from ..lp.simplex import LpStatus
from ..oracle.verify import is_nash
from ..parametric.context import ParamContext, face_point, solve_param
from ..parametric.faces import Direction, br_lp_solution, q_lp, true_inequalities
from ..utils.logger import StructuredLogger
from ..utils.metrics import record_binsearch_iterations


@dataclass
class SearchState:
    """Current bracket and the path points certifying it."""
    lo: Fraction
    hi: Fraction
    lo_witness: Optional[MixedProfile] = None
    hi_witness: Optional[MixedProfile] = None


class BinarySearchSolver:
    """
    Finds one equilibrium of a rank-1 game.
    """

    def __init__(self, config: Optional[SearchConfig] = None, lp_config: Optional[LpConfig] = None):
        self.config = config or SearchConfig()
        self.lp_config = lp_config or LpConfig()
        self.logger = logging.getLogger(__name__)

    def solve(self, game: RankOneGame) -> EquilibriumRecord:
        ctx = ParamContext(game.A, game.b, self.lp_config)
        a = game.a
        log = StructuredLogger(__name__, {'m': ctx.m, 'n': ctx.n})
        lo, hi = min(a), max(a)

        if lo == hi:
            # λ = xᵀa holds for every x
            opt = solve_param(ctx, lo)
            record_binsearch_iterations(0)
            return self._record(game, opt.x, opt.y, -opt.t, opt.v, lo, 0)

        state = SearchState(lo, hi)
        if self.config.check_invariants:
            state.lo_witness = self._witness(ctx, lo, None)
            state.hi_witness = self._witness(ctx, hi, None)

        for iteration in range(1, self.config.max_iterations + 1):
            if self.config.check_invariants:
                self._check_invariant(ctx, a, state)
            lam = (state.lo + state.hi) / 2
            opt = solve_param(ctx, lam)
            xa = dot(opt.x, a)
            step_log = log.with_context(iteration=iteration)
            step_log.debug("Midpoint", lo=state.lo, hi=state.hi, lam=lam, xa=xa)

            if xa == lam:
                record_binsearch_iterations(iteration)
                return self._record(game, opt.x, opt.y, -opt.t, opt.v, lam, iteration)

            tineq = true_inequalities(ctx, lam, opt.phi)
            direction = Direction.MAX if lam < xa else Direction.MIN
            q = q_lp(ctx, tineq, a, lam, direction)
            if not q.is_optimal:
                raise SearchDiverged(f"hyperplane LP at {lam} returned {q.status.value}")
            point = face_point(ctx, q)
            if q.objective_value == 0:
                record_binsearch_iterations(iteration)
                y, t = self._y_at(ctx, point.lam)
                return self._record(game, point.x, y, -t, point.v, point.lam, iteration)

            # land exactly on the next breakpoint in the search direction
            br = br_lp_solution(ctx, tineq, direction)
            if br.status is not LpStatus.OPTIMAL:
                raise SearchDiverged(f"no breakpoint beyond {lam} although the hyperplane was not met")
            corner = face_point(ctx, br)
            step_log.debug("Move bracket", branch=direction.value, breakpoint=corner.lam)
            if direction is Direction.MAX:
                state.lo = corner.lam
                if self.config.check_invariants:
                    state.lo_witness = self._witness(ctx, corner.lam, corner.x)
            else:
                state.hi = corner.lam
                if self.config.check_invariants:
                    state.hi_witness = self._witness(ctx, corner.lam, corner.x)

        raise SearchDiverged(f"no equilibrium after {self.config.max_iterations} iterations")

    @staticmethod
    def _y_at(ctx: ParamContext, lam: Fraction):
        opt = solve_param(ctx, lam)
        return opt.y, opt.t

    def _witness(self, ctx: ParamContext, lam: Fraction, x: Optional[Vector]) -> MixedProfile:
        opt = solve_param(ctx, lam)
        return MixedProfile(opt.x if x is None else x, opt.y)

    def _check_invariant(self, ctx: ParamContext, a: Sequence[Fraction], state: SearchState) -> None:
        """Raise AssertionError unless both bracket ends are certified by path points."""
        for lam, witness, below in ((state.lo, state.lo_witness, True), (state.hi, state.hi_witness, False)):
            xa = dot(witness.x, a)
            if (below and not lam <= xa) or (not below and not xa <= lam):
                raise AssertionError(f"bracket end {lam} not certified: xᵀa = {xa}")
            shift = RatMatrix.outer(ones(ctx.m), vscale(lam, ctx.b))
            if not is_nash(Game(ctx.A, -ctx.A + shift), witness):
                raise AssertionError(f"bracket witness at {lam} is not on the solution path")
        if not state.lo < state.hi:
            raise AssertionError(f"empty bracket [{state.lo}, {state.hi}]")

    def _record(self, game: RankOneGame, x, y, payoff_1, payoff_2, lam, iterations) -> EquilibriumRecord:
        self.logger.info(f"Equilibrium found at lambda={lam} after {iterations} iterations")
        return EquilibriumRecord(MixedProfile(tuple(x), tuple(y)), payoff_1, payoff_2, lam, iterations)


def binsearch(
    game: RankOneGame, config: Optional[SearchConfig] = None, lp_config: Optional[LpConfig] = None
) -> EquilibriumRecord:
    """One equilibrium of (A, −A + abᵀ) with payoffs and λ = xᵀa."""
    return BinarySearchSolver(config, lp_config).solve(game)


def binsearch_factored(
    A: RatMatrix, a: Sequence, b: Sequence,
    config: Optional[SearchConfig] = None, lp_config: Optional[LpConfig] = None,
) -> EquilibriumRecord:
    """Same as :func:`binsearch` for a game given as (A, a, b)."""
    return binsearch(RankOneGame.from_vectors(A, a, b), config, lp_config)
