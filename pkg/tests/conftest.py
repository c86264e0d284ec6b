"""
Shared fixtures for the test suite.
"""

from fractions import Fraction

import pytest

from rank1eq.config import Config, EnumerationConfig, LpConfig, OracleConfig, SearchConfig
from rank1eq.core.matrix import RatMatrix
from rank1eq.core.models import RankOneGame
from rank1eq.generators import ex1_rank_one
from rank1eq.parametric import ParamContext

F = Fraction


@pytest.fixture
def lp_config():
    """Create an LP configuration that verifies every certificate."""
    return LpConfig(verify_certificates=True, max_pivots=50000)


@pytest.fixture
def config(lp_config):
    """Create test configuration."""
    return Config(
        version="test",
        lp=lp_config,
        search=SearchConfig(max_iterations=64, check_invariants=True),
        enumeration=EnumerationConfig(max_tight_subsets=100000),
        oracle=OracleConfig(size_limit=4),
    )


@pytest.fixture
def ex1_game():
    """The 2x2 worked example with a = (2, -1), b = (1, -1)."""
    return ex1_rank_one()


@pytest.fixture
def ex1_ctx(ex1_game, lp_config):
    """Parameterized LP context of the worked example."""
    return ParamContext.for_game(ex1_game, lp_config)


@pytest.fixture
def all_profiles_game():
    """A = 0, a = b = (1, 1): every profile is an equilibrium."""
    return RankOneGame.from_vectors(RatMatrix.zeros(2, 2), [1, 1], [1, 1])
