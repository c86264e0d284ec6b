"""
Test suite for the binary search solver.
"""

from fractions import Fraction

import pytest

from rank1eq.config import SearchConfig
from rank1eq.core.errors import SearchDiverged
from rank1eq.core.matrix import RatMatrix
from rank1eq.core.models import MixedProfile, RankOneGame
from rank1eq.core.rational import dot
from rank1eq.generators import ExpoParams, expo_rank_one, gen_random_rank1
from rank1eq.oracle import is_nash
from rank1eq.solver import BinarySearchSolver, binsearch, binsearch_factored

F = Fraction

EX1_EQUILIBRIA = {
    ((F(0), F(1)), (F(0), F(1))),
    ((F(1, 4), F(3, 4)), (F(1, 2), F(1, 2))),
    ((F(1), F(0)), (F(1), F(0))),
}


def assert_valid_record(game: RankOneGame, record):
    full = game.to_game()
    profile = record.profile
    assert is_nash(full, profile)
    assert record.lam == dot(profile.x, game.a)
    assert record.payoff_1 == full.A.bilinear(profile.x, profile.y)
    assert record.payoff_2 == full.B.bilinear(profile.x, profile.y)


@pytest.fixture
def solver(config):
    """Create test solver with the invariant check on."""
    return BinarySearchSolver(config.search, config.lp)


class TestBinarySearch:
    """Test cases for BinarySearchSolver."""

    def test_worked_example(self, solver, ex1_game):
        """Test that the result is one of the three equilibria."""
        record = solver.solve(ex1_game)
        assert (record.profile.x, record.profile.y) in EX1_EQUILIBRIA
        assert_valid_record(ex1_game, record)

    def test_factored_entry_point(self, config):
        """Test binsearch_factored on (A, a, b)."""
        record = binsearch_factored(RatMatrix.identity(2), [2, -1], [1, -1], config.search, config.lp)
        assert (record.profile.x, record.profile.y) in EX1_EQUILIBRIA

    def test_zero_sum(self, solver):
        """Test matching pennies given with a = 0, b = 0."""
        game = RankOneGame.from_vectors(RatMatrix.from_rows([[1, -1], [-1, 1]]), [0, 0], [0, 0])
        record = solver.solve(game)
        assert record.profile == MixedProfile.of([F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)])
        assert record.payoff_1 == 0
        assert record.iterations == 0

    def test_constant_a(self, solver, all_profiles_game):
        """Test that a constant a needs no search step."""
        record = solver.solve(all_profiles_game)
        assert record.lam == 1
        assert_valid_record(all_profiles_game, record)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_exponential_family(self, solver, n):
        """Test the exponential family up to n = 6."""
        game = expo_rank_one(ExpoParams(n))
        record = solver.solve(game)
        assert_valid_record(game, record)

    @pytest.mark.parametrize("seed", range(200))
    def test_random_games(self, solver, seed):
        """Test random rank-1 games with the bracket invariant checked at every step."""
        m, n = 2 + seed % 3, 2 + (seed // 3) % 3
        game = gen_random_rank1(m, n, 9, seed)
        record = solver.solve(game)
        assert_valid_record(game, record)
        assert record.iterations <= 64

    def test_iteration_budget(self, ex1_game, lp_config):
        """Test that a zero iteration budget raises SearchDiverged."""
        with pytest.raises(SearchDiverged):
            binsearch(ex1_game, SearchConfig(max_iterations=0), lp_config)
