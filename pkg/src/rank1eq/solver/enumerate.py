"""
All equilibria of a rank-1 game as maximal Nash subsets.

The walk visits every segment of the solution path over [min a, max a]. A
segment contributes the product of its X-face cut by xᵀa = λ and its Y-face
whenever that cut is nonempty; an interval cut that collapses onto one of its
end breakpoints is already covered by the breakpoint's subset and is dropped.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..config import EnumerationConfig, LpConfig
from ..core.errors import EmptyFace
from ..core.models import LambdaInterval, NashSubset, RankOneGame, SubsetKind, TrueInequalities
from ..core.polytope import Halfspace, polytope_vertices
from ..core.rational import ONE, ZERO, Vector
from ..parametric.context import ParamContext
from ..parametric.faces import Direction, lambda_extreme, q_lp
from ..parametric.walk import Segment, SegmentKind, next_breakpoint_walk
from ..utils.metrics import record_subsets_emitted

logger = logging.getLogger(__name__)


def x_face_vertices(
    ctx: ParamContext,
    tineq: TrueInequalities,
    a: Sequence[Fraction],
    lam: Optional[Fraction] = None,
    max_subsets: Optional[int] = None,
) -> List[Vector]:
    """
    Vertices of {x | (xᵀa, x) ∈ P(M, N)}, optionally with xᵀa fixed to ``lam``.

    Works in (x, v) with λ replaced by xᵀa; s_j is (Aᵀx + 1v − b·xᵀa)_j.
    """
    m, n = ctx.m, ctx.n
    size = m + 1
    equalities: List[Halfspace] = [((ONE,) * m + (ZERO,), ONE)]
    inequalities: List[Halfspace] = []
    for i in range(m):
        unit_row = tuple(ONE if k == i else ZERO for k in range(m)) + (ZERO,)
        if i in tineq.rows:
            equalities.append((unit_row, ZERO))
        else:
            inequalities.append((tuple(-c for c in unit_row), ZERO))
    for j in range(n):
        slack = tuple(ctx.A[i, j] - ctx.b[j] * a[i] for i in range(m)) + (ONE,)
        if j in tineq.cols:
            equalities.append((slack, ZERO))
        else:
            inequalities.append((tuple(-c for c in slack), ZERO))
    if lam is not None:
        equalities.append((tuple(a) + (ZERO,), Fraction(lam)))
    vertices = polytope_vertices(size, equalities, inequalities, max_subsets)
    return sorted({z[:m] for z in vertices})


def y_face_vertices(
    ctx: ParamContext, tineq: TrueInequalities, max_subsets: Optional[int] = None
) -> List[Vector]:
    """Vertices of the face of D with true inequalities (M, N), projected to y."""
    m, n = ctx.m, ctx.n
    size = n + 1
    equalities: List[Halfspace] = [((ONE,) * n + (ZERO,), ONE)]
    inequalities: List[Halfspace] = []
    for i in range(m):
        row = ctx.A.row(i) + (ONE,)
        if i in tineq.rows:
            inequalities.append((row, ZERO))
        else:
            equalities.append((row, ZERO))
    for j in range(n):
        unit_row = tuple(ONE if k == j else ZERO for k in range(n)) + (ZERO,)
        if j in tineq.cols:
            inequalities.append((tuple(-c for c in unit_row), ZERO))
        else:
            equalities.append((unit_row, ZERO))
    vertices = polytope_vertices(size, equalities, inequalities, max_subsets)
    return sorted({z[:n] for z in vertices})


def subset_vertices(
    ctx: ParamContext,
    tineq: TrueInequalities,
    a: Sequence[Fraction],
    lam: Optional[Fraction] = None,
    max_subsets: Optional[int] = None,
):
    """x- and y-vertices of the Nash subset cut from the face (M, N) by xᵀa = λ."""
    xs = x_face_vertices(ctx, tineq, a, lam, max_subsets)
    if not xs:
        raise EmptyFace(f"face (M={sorted(tineq.rows)}, N={sorted(tineq.cols)}) misses xᵀa = λ")
    return xs, y_face_vertices(ctx, tineq, max_subsets)


class EquilibriumEnumerator:
    """
    Walks the solution path once and emits its maximal Nash subsets.
    """

    def __init__(self, config: Optional[EnumerationConfig] = None, lp_config: Optional[LpConfig] = None):
        self.config = config or EnumerationConfig()
        self.lp_config = lp_config or LpConfig()
        self.logger = logging.getLogger(__name__)

    def enumerate(self, game: RankOneGame) -> List[NashSubset]:
        ctx = ParamContext(game.A, game.b, self.lp_config)
        a = game.a
        lo, hi = min(a), max(a)
        subsets: List[NashSubset] = []

        for segment in next_breakpoint_walk(ctx, lo, hi):
            subset = self._subset_of(ctx, a, lo, segment)
            if subset is not None:
                subsets.append(subset)

        subsets.sort(key=_order_key)
        record_subsets_emitted(len(subsets))
        self.logger.info(f"Enumerated {len(subsets)} maximal Nash subsets of a {ctx.m}x{ctx.n} game")
        return subsets

    def _subset_of(self, ctx: ParamContext, a: Vector, lo: Fraction, segment: Segment) -> Optional[NashSubset]:
        seg_range = segment.lambda_range
        start = lo if seg_range.lower is None else max(seg_range.lower, lo)
        if seg_range.upper is not None and seg_range.upper < start:
            return None
        hit = q_lp(ctx, segment.trueineq, a, start, Direction.MAX)
        if not hit.is_optimal or hit.objective_value != 0:
            return None

        max_subsets = self.config.max_tight_subsets
        if segment.kind is SegmentKind.BREAKPOINT:
            lam = seg_range.lower
            xs, ys = subset_vertices(ctx, segment.trueineq, a, lam, max_subsets)
            return NashSubset(SubsetKind.BREAKPOINT, LambdaInterval(lam, lam), tuple(xs), tuple(ys),
                              segment.trueineq, seg_range)

        lmin = lambda_extreme(ctx, segment.trueineq, a, Direction.MIN)
        lmax = lambda_extreme(ctx, segment.trueineq, a, Direction.MAX)
        if lmin is None:
            return None
        if lmin == lmax and lmin in (seg_range.lower, seg_range.upper):
            # contained in the subset of that breakpoint
            logger.debug(f"Interval subset at {lmin} dropped in favour of the breakpoint")
            return None
        xs, ys = subset_vertices(ctx, segment.trueineq, a, None, max_subsets)
        return NashSubset(SubsetKind.INTERVAL, LambdaInterval(lmin, lmax), tuple(xs), tuple(ys),
                          segment.trueineq, seg_range)


def _order_key(subset: NashSubset):
    kind_rank = 0 if subset.kind is SubsetKind.BREAKPOINT else 1
    return (subset.lambda_set.lower, kind_rank, subset.lambda_set.upper)


def enumerate_all(
    game: RankOneGame, config: Optional[EnumerationConfig] = None, lp_config: Optional[LpConfig] = None
) -> List[NashSubset]:
    """The maximal Nash subsets of (A, −A + abᵀ), in ascending λ."""
    return EquilibriumEnumerator(config, lp_config).enumerate(game)
