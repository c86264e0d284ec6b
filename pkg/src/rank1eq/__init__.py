"""
Exact Nash equilibria of rank-1 bimatrix games.
"""

__version__ = "1.0.0"

from .config import Config, load_config
from .core import (
    EquilibriumRecord,
    Game,
    MixedProfile,
    NashSubset,
    RankOneGame,
    RatMatrix,
    as_rank_one,
)
from .oracle import is_nash, support_enumeration
from .solver import binsearch, binsearch_factored, enumerate_all
from .suite import Rank1Suite
