#!/usr/bin/env python3
"""
Demo script for rank1eq.
Walks the 2x2 worked example and the rank-2 negative control.
"""

import logging

from rank1eq.core.errors import RankError
from rank1eq.core.models import MixedProfile, as_rank_one
from rank1eq.generators import ex1_rank_one, ex3
from rank1eq.oracle import is_nash
from rank1eq.parametric import ParamContext, SegmentKind, next_breakpoint_walk, phi
from rank1eq.suite import Rank1Suite
from rank1eq.utils.logger import setup_logging
from rank1eq.utils.metrics import MetricsExporter, metrics_registry

logger = logging.getLogger(__name__)


class Rank1Demo:
    """
    Demonstration of the solution path, binary search and enumeration.
    """

    def __init__(self):
        self.game = ex1_rank_one()
        self.ctx = ParamContext.for_game(self.game)
        self.suite = Rank1Suite()

    def show_path(self) -> None:
        print("Solution path over [min a, max a]:")
        for segment in next_breakpoint_walk(self.ctx, min(self.game.a), max(self.game.a)):
            r = segment.lambda_range
            if segment.kind is SegmentKind.BREAKPOINT:
                print(f"  breakpoint {r.lower}: slopes {segment.breakpoint.left_slope} -> "
                      f"{segment.breakpoint.right_slope}")
            else:
                print(f"  interval [{r.lower}, {r.upper}]: M={sorted(segment.trueineq.rows)} "
                      f"N={sorted(segment.trueineq.cols)}")
        for lam in (-1, 0, 1):
            print(f"  phi({lam}) = {phi(self.ctx, lam)}")

    def show_equilibria(self) -> None:
        record = self.suite.solve(self.game)
        print(f"Binary search: x={record.profile.x} y={record.profile.y} lambda={record.lam} "
              f"after {record.iterations} iterations")
        print("All maximal Nash subsets:")
        for subset in self.suite.enumerate(self.game):
            print(f"  {subset.kind.value} lambda={subset.lambda_set.lower}: "
                  f"x={subset.x_vertices} y={subset.y_vertices}")
        oracle = self.suite.oracle_equilibria(self.game.to_game())
        print(f"Support enumeration finds {len(oracle)} extreme equilibria")

    def show_rank_two(self) -> None:
        game = ex3()
        try:
            as_rank_one(game)
        except RankError as e:
            print(f"ex3 rejected: {e}")
        print(f"((1,0),(1,0)) is an equilibrium of ex3: {bool(is_nash(game, MixedProfile.of([1, 0], [1, 0])))}")

    def run(self) -> None:
        self.show_path()
        self.show_equilibria()
        self.show_rank_two()
        print("Metrics:")
        print(MetricsExporter(metrics_registry).export_text())


if __name__ == "__main__":
    setup_logging("INFO")
    Rank1Demo().run()
