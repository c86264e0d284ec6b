"""
Fixtures and game families.
"""

from .games import (
    FIXTURE_NAMES,
    ExpoParams,
    TradeParams,
    ex1,
    ex1_rank_one,
    ex3,
    expo_rank_one,
    fixture,
    gen_expo,
    gen_random_game,
    gen_random_rank1,
    gen_trade,
    param_n2,
)
