"""
Walking the solution path of the parameterized pair from breakpoint to breakpoint.

At a breakpoint λ_k the segment to its right has the optimal face of
maximizing bᵀy over Y(λ_k) as its Y-face, so the data of the next interval
and the next breakpoint follow from LPs at λ_k alone; no interior λ is ever
sampled.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from ..core.errors import Rank1EqError
from ..core.models import LambdaInterval, TrueInequalities
from ..core.rational import Vector, dot
from ..utils.metrics import record_breakpoint
from .context import ParamContext, phi
from .faces import Direction, br_lp, sl_lp, y_face_true_inequalities

logger = logging.getLogger(__name__)


class SegmentKind(Enum):
    INTERVAL = "interval"
    BREAKPOINT = "breakpoint"


@dataclass(frozen=True)
class Breakpoint:
    """A λ where φ changes slope from left_slope to right_slope."""

    lam: Fraction
    left_slope: Fraction
    right_slope: Fraction

    def __post_init__(self):
        if not self.left_slope < self.right_slope:
            raise ValueError(
                f"not a breakpoint: slopes {self.left_slope} and {self.right_slope} at {self.lam}"
            )


@dataclass(frozen=True)
class Segment:
    """
    One polyhedral piece of the solution path.

    For an interval the value function is value_slope·λ + value_intercept on
    the whole range. For a breakpoint segment the slope is the right derivative.
    """

    kind: SegmentKind
    lambda_range: LambdaInterval
    trueineq: TrueInequalities
    y_face_witness: Vector  # (y_1..y_n, t)
    value_slope: Fraction
    value_intercept: Fraction
    breakpoint: Optional[Breakpoint] = None

    @property
    def y(self) -> Vector:
        return self.y_face_witness[:-1]

    @property
    def t(self) -> Fraction:
        return self.y_face_witness[-1]

    def value_at(self, lam: Fraction) -> Fraction:
        return self.value_slope * lam + self.value_intercept


def slopes_at(ctx: ParamContext, lam, phi_value) -> Tuple[Fraction, Fraction]:
    """Left and right derivatives of φ at λ."""
    left = sl_lp(ctx, lam, phi_value, Direction.MIN).objective_value
    right = sl_lp(ctx, lam, phi_value, Direction.MAX).objective_value
    return left, right


def breakpoint_at(ctx: ParamContext, lam, phi_value=None) -> Optional[Breakpoint]:
    """The breakpoint at λ, or None if φ is differentiable there."""
    lam = Fraction(lam)
    if phi_value is None:
        phi_value = phi(ctx, lam)
    left, right = slopes_at(ctx, lam, phi_value)
    if left == right:
        return None
    return Breakpoint(lam, left, right)


def next_breakpoint_walk(
    ctx: ParamContext, from_lambda, upper=None
) -> Iterator[Segment]:
    """
    Yield segments in increasing λ, starting with the one containing from_lambda.

    Stops after the first interval that reaches beyond ``upper`` (or is
    unbounded). A breakpoint exactly at ``upper`` is still yielded together
    with the interval that follows it.
    """
    lam = Fraction(from_lambda)
    upper = None if upper is None else Fraction(upper)
    phi_value = phi(ctx, lam)
    bp = breakpoint_at(ctx, lam, phi_value)

    if bp is None:
        tineq, witness = y_face_true_inequalities(ctx, lam, phi_value)
        slope = dot(ctx.b, witness[:-1])
        intercept = phi_value - lam * slope
        lower_end = br_lp(ctx, tineq, Direction.MIN)
        upper_end = br_lp(ctx, tineq, Direction.MAX)
        logger.debug(f"Walk starts inside interval [{lower_end}, {upper_end}] at {lam}")
        yield Segment(SegmentKind.INTERVAL, LambdaInterval(lower_end, upper_end),
                      tineq, witness, slope, intercept)
        if upper_end is None or (upper is not None and upper_end > upper):
            return
        lam = upper_end
        phi_value = slope * lam + intercept
        bp = None

    while True:
        if bp is None:
            bp = breakpoint_at(ctx, lam, phi_value)
            if bp is None:
                raise Rank1EqError(f"segment end {lam} is not a breakpoint")
        record_breakpoint()
        logger.debug(f"Breakpoint at {lam}: slopes {bp.left_slope} -> {bp.right_slope}")

        tineq, witness = y_face_true_inequalities(ctx, lam, phi_value)
        intercept = phi_value - lam * bp.right_slope
        yield Segment(SegmentKind.BREAKPOINT, LambdaInterval(lam, lam), tineq, witness,
                      bp.right_slope, intercept, breakpoint=bp)

        right_tineq, right_witness = y_face_true_inequalities(ctx, lam, phi_value, bp.right_slope)
        next_lam = br_lp(ctx, right_tineq, Direction.MAX)
        yield Segment(SegmentKind.INTERVAL, LambdaInterval(lam, next_lam), right_tineq,
                      right_witness, bp.right_slope, intercept)
        if next_lam is None or (upper is not None and next_lam > upper):
            return
        phi_value = bp.right_slope * next_lam + intercept
        lam = next_lam
        bp = None


@dataclass(frozen=True)
class ValuePiece:
    start: Optional[Fraction]  # None for the leftmost piece
    slope: Fraction
    intercept: Fraction


@dataclass(frozen=True)
class ValueFunction:
    """Piecewise-linear convex φ, exact on the walked range."""

    pieces: Tuple[ValuePiece, ...]

    @property
    def breakpoints(self) -> List[Fraction]:
        return [piece.start for piece in self.pieces[1:]]

    def evaluate(self, lam) -> Fraction:
        lam = Fraction(lam)
        current = self.pieces[0]
        for piece in self.pieces[1:]:
            if piece.start <= lam:
                current = piece
            else:
                break
        return current.slope * lam + current.intercept

    def is_convex(self) -> bool:
        return all(p.slope < q.slope for p, q in zip(self.pieces, self.pieces[1:]))


def value_function(ctx: ParamContext, lo, hi) -> ValueFunction:
    """φ on [lo, hi] assembled from the interval segments of a walk."""
    pieces = []
    for segment in next_breakpoint_walk(ctx, lo, hi):
        if segment.kind is SegmentKind.INTERVAL:
            start = segment.lambda_range.lower if pieces else None
            pieces.append(ValuePiece(start, segment.value_slope, segment.value_intercept))
    return ValueFunction(tuple(pieces))
