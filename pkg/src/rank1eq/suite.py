"""
Facade that owns the configured components and runs one request each.
"""

import logging
from typing import List, Optional

from .config import Config
from .core.errors import VerificationFailed
from .core.models import EquilibriumRecord, Game, MixedProfile, NashSubset, RankOneGame
from .oracle.support import SupportEnumerator
from .oracle.verify import NashCheck, is_nash, qp_value
from .solver.binsearch import BinarySearchSolver
from .solver.enumerate import EquilibriumEnumerator
from .utils.logger import log_function_call
from .utils.metrics import time_function


class Rank1Suite:
    """
    Coordinates the solvers and the oracle under a single configuration.
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self.logger = logging.getLogger(__name__)

        self.solver = BinarySearchSolver(self.config.search, self.config.lp)
        self.enumerator = EquilibriumEnumerator(self.config.enumeration, self.config.lp)
        self.oracle = SupportEnumerator(self.config.oracle)

    @time_function('rank1eq_command_seconds', {'command': 'solve'})
    def solve(self, game: RankOneGame) -> EquilibriumRecord:
        record = self.solver.solve(game)
        check = is_nash(game.to_game(), record.profile)
        if not check:
            self.logger.error("Binary search returned a profile that is not an equilibrium")
            raise VerificationFailed(f"solver result at lambda={record.lam} is not a Nash equilibrium")
        return record

    @time_function('rank1eq_command_seconds', {'command': 'enumerate'})
    def enumerate(self, game: RankOneGame) -> List[NashSubset]:
        return self.enumerator.enumerate(game)

    @time_function('rank1eq_command_seconds', {'command': 'oracle'})
    def oracle_equilibria(self, game: Game) -> List[MixedProfile]:
        return self.oracle.extreme_equilibria(game)

    @log_function_call
    def check(self, game: Game, profile: MixedProfile):
        """Verdict, certificates and QP value of a profile."""
        result: NashCheck = is_nash(game, profile)
        return result, qp_value(game, profile)
