"""
Test suite for fixtures and game families.
"""

from fractions import Fraction

import pytest

from rank1eq.core.errors import UnknownFixture
from rank1eq.core.matrix import RatMatrix
from rank1eq.core.models import MixedProfile, as_rank_one
from rank1eq.generators import (
    ExpoParams,
    TradeParams,
    ex1,
    ex1_rank_one,
    expo_rank_one,
    fixture,
    gen_expo,
    gen_random_game,
    gen_random_rank1,
    gen_trade,
)
from rank1eq.oracle import is_nash, support_enumeration

F = Fraction


@pytest.fixture
def trade_params():
    """Create test trade game parameters."""
    return TradeParams(
        quality=[1, 2],
        quantity=[1, 3],
        prices=RatMatrix.from_rows([[2, 5], [3, 7]]),
        alpha=1,
        beta=2,
        gamma=[1, -1],
        delta=[0, 2],
    )


class TestFixtures:
    """Test cases for named fixtures."""

    def test_ex1_factorization(self):
        """Test that ex1 and its factored form describe the same game."""
        assert ex1_rank_one().to_game() == ex1()
        assert ex1().rank() == 1

    def test_lookup(self):
        """Test fixture lookup by name."""
        assert fixture("ex1") == ex1()
        assert fixture("ex3").rank() == 2

    def test_param_n2(self):
        """Test the parameterized fixture at a rational λ."""
        game = fixture("param-N2(-1/2)")
        assert game.B == RatMatrix.from_rows([[F(7, 2), 0], [F(-1, 2), 0]])

    @pytest.mark.parametrize("name", ["ex2", "param-N2()", "param-N2(x)"])
    def test_unknown(self, name):
        """Test that unknown names raise UnknownFixture."""
        with pytest.raises((UnknownFixture, ValueError)):
            fixture(name)


class TestExponentialFamily:
    """Test cases for the exponential family."""

    def test_entries(self):
        """Test the n = 2, p = 3 matrix."""
        game = gen_expo(ExpoParams(2))
        assert game.A == RatMatrix.from_rows([[9, 54], [0, 81]])
        assert game.B == game.A.T

    def test_natural_factorization(self):
        """Test a_i = p^i and b_j = 2p^j."""
        game = expo_rank_one(ExpoParams(3))
        assert game.a == (F(3), F(9), F(27))
        assert game.b == (F(6), F(18), F(54))
        assert game.to_game() == gen_expo(ExpoParams(3))

    @pytest.mark.parametrize("n", [2, 3])
    def test_equilibrium_count(self, n):
        """Test 2^n − 1 equilibria by brute force."""
        assert len(support_enumeration(gen_expo(ExpoParams(n)))) == 2 ** n - 1

    @pytest.mark.parametrize("kwargs", [{"n": 0}, {"n": 2, "p": 2}, {"n": 2, "p": 1}])
    def test_invalid_params(self, kwargs):
        """Test that n < 1 or p <= 2 is rejected."""
        with pytest.raises(ValueError):
            ExpoParams(**kwargs)


class TestTradeGame:
    """Test cases for the seller/buyer trade game."""

    def test_full_game_entries(self, trade_params):
        """Test that the full game is built entry by entry."""
        full, _ = gen_trade(trade_params)
        # p − α·q·Q + γ and −p + β·q·Q + δ
        assert full.A == RatMatrix.from_rows([[2, 1], [2, 0]])
        assert full.B == RatMatrix.from_rows([[0, 1], [3, 7]])

    def test_reduction_is_rank_one(self, trade_params):
        """Test the reduced sum (β − α)·quality·quantityᵀ."""
        _, reduced = gen_trade(trade_params)
        assert reduced.a == (F(1), F(2))
        assert reduced.b == (F(1), F(3))
        assert reduced.to_game().rank() == 1

    def test_same_equilibria(self, trade_params):
        """Test that the reduction keeps every equilibrium of the full game."""
        full, reduced = gen_trade(trade_params)
        for profile in support_enumeration(full):
            assert is_nash(reduced.to_game(), profile)
        for profile in support_enumeration(reduced.to_game()):
            assert is_nash(full, profile)

    def test_invalid_params(self):
        """Test that beta must exceed alpha."""
        with pytest.raises(ValueError):
            TradeParams([1], [1], RatMatrix.from_rows([[1]]), alpha=2, beta=1)


class TestRandomGames:
    """Test cases for seeded random games."""

    def test_reproducible(self):
        """Test that a seed fixes the game."""
        assert gen_random_rank1(3, 2, 9, 7) == gen_random_rank1(3, 2, 9, 7)
        assert gen_random_game(2, 2, 9, 7) == gen_random_game(2, 2, 9, 7)

    def test_rank_and_bounds(self):
        """Test that entries stay within bound and the sum has rank at most 1."""
        game = gen_random_rank1(3, 4, 5, 11)
        assert all(-5 <= v <= 5 for v in game.A.entries + game.a + game.b)
        assert game.to_game().rank() <= 1
        assert as_rank_one(game.to_game()).factorization.product() == game.to_game().payoff_sum

    def test_invalid_dimensions(self):
        """Test that empty games are rejected."""
        with pytest.raises(ValueError):
            gen_random_rank1(0, 2)

    def test_profiles_on_random_game(self):
        """Test that oracle output on a random game is made of equilibria."""
        game = gen_random_game(2, 3, 9, 3)
        for profile in support_enumeration(game):
            assert isinstance(profile, MixedProfile)
            assert is_nash(game, profile)


class TestDocumentedExamples:
    """Test cases for small documented instances."""

    def test_param_n2_at_minus_four(self):
        """Test the player-2 matrix of param-N2(−4)."""
        assert fixture("param-N2(-4)").B == RatMatrix.from_rows([[0, 0], [-4, 0]])

    def test_expo_single_strategy(self):
        """Test n = 1: A = [p²] and one equilibrium."""
        game = gen_expo(ExpoParams(1))
        assert game.A == RatMatrix.from_rows([[9]])
        assert len(support_enumeration(game)) == 1

    def test_zero_shifts_keep_full_game(self):
        """Test that γ = δ = 0 makes the full game equal to the reduced one."""
        params = TradeParams([1, 2], [1, 2], RatMatrix.zeros(2, 2), alpha=1, beta=2)
        full, reduced = gen_trade(params)
        assert full == reduced.to_game()
        assert support_enumeration(full) == support_enumeration(reduced.to_game())
