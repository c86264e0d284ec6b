"""
The λ-parameterized LP pair, its optimal faces and its breakpoint walk.
"""

from .context import FacePoint, ParamContext, ParamOptimum, face_point, phi, solve_P, solve_param
from .faces import (
    Direction,
    br_lp,
    br_lp_solution,
    lambda_extreme,
    q_lp,
    sl_lp,
    true_inequalities,
    y_face_true_inequalities,
)
from .walk import (
    Breakpoint,
    Segment,
    SegmentKind,
    ValueFunction,
    breakpoint_at,
    next_breakpoint_walk,
    value_function,
)
