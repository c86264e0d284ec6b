"""
Game file codec and JSON report models.
"""

from .gamefile import GameFile, format_game, format_rank_one, parse_game, read_game, write_game
from .reports import (
    CheckReport,
    EnumerationReport,
    EquilibriumReport,
    ErrorReport,
    HomeoReport,
    RankReport,
    SubsetReport,
)
