"""
Test suite for the verification oracle.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank1eq.config import OracleConfig
from rank1eq.core.errors import DimensionError, LimitExceeded
from rank1eq.core.matrix import RatMatrix, shift_columns
from rank1eq.core.models import Game, MixedProfile
from rank1eq.generators import ExpoParams, ex1, ex3, gen_expo, gen_random_rank1, param_n2
from rank1eq.oracle import (
    SupportEnumerator,
    check_lemma_equiv,
    is_degenerate,
    is_nash,
    polyhedron_vertices,
    qp_value,
    support_enumeration,
)

F = Fraction

entries = st.integers(min_value=-5, max_value=5)


@st.composite
def matrices(draw, m, n):
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
    return RatMatrix.from_rows(rows)


@st.composite
def distributions(draw, k):
    weights = draw(st.lists(st.integers(0, 4), min_size=k, max_size=k).filter(lambda w: sum(w) > 0))
    total = sum(weights)
    return tuple(F(w, total) for w in weights)


@st.composite
def games_with_profiles(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    A = draw(matrices(m, n))
    C = draw(matrices(m, n))
    a = tuple(F(v) for v in draw(st.lists(entries, min_size=m, max_size=m)))
    b = tuple(F(v) for v in draw(st.lists(entries, min_size=n, max_size=n)))
    profile = MixedProfile(draw(distributions(m)), draw(distributions(n)))
    return A, C, a, b, profile


class TestIsNash:
    """Test cases for is_nash and qp_value."""

    def test_pure_equilibrium(self):
        """Test ((1,0),(1,0)) in the rank-2 fixture."""
        check = is_nash(ex3(), MixedProfile.of([1, 0], [1, 0]))
        assert check
        assert (check.u, check.v) == (1, 1)
        assert check.row.best_responses() == (0,)

    def test_mixed_equilibrium(self):
        """Test the mixed equilibrium of the worked example."""
        profile = MixedProfile.of([F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)])
        check = is_nash(ex1(), profile)
        assert check.is_equilibrium
        assert check.u == F(1, 2)
        assert check.v == F(-1, 2)
        assert qp_value(ex1(), profile) == 0

    def test_not_an_equilibrium(self):
        """Test a profile with a strictly better deviation."""
        profile = MixedProfile.of([0, 1], [1, 0])
        assert not is_nash(ex3(), profile)
        assert qp_value(ex3(), profile) < 0

    def test_invalid_profiles(self):
        """Test that malformed profiles are rejected."""
        with pytest.raises(DimensionError):
            is_nash(ex1(), MixedProfile.of([1], [1, 0]))
        with pytest.raises(ValueError):
            is_nash(ex1(), MixedProfile.of([F(1, 2), F(1, 3)], [1, 0]))

    @settings(max_examples=150, deadline=None)
    @given(games_with_profiles())
    def test_qp_zero_iff_equilibrium(self, data):
        """Test that the QP value is 0 exactly at equilibria and negative elsewhere."""
        A, C, _, _, profile = data
        game = Game(A, C)
        value = qp_value(game, profile)
        assert value <= 0
        assert (value == 0) == bool(is_nash(game, profile))

    @settings(max_examples=150, deadline=None)
    @given(games_with_profiles(), st.data())
    def test_column_shift_invariance(self, data, extra):
        """Test that subtracting a constant from each column of A keeps the verdict."""
        A, C, _, _, profile = data
        shift = tuple(F(v) for v in extra.draw(st.lists(entries, min_size=A.cols, max_size=A.cols)))
        assert bool(is_nash(Game(A, C), profile)) == bool(is_nash(Game(shift_columns(A, shift), C), profile))


class TestLemmaEquivalence:
    """Test cases for the three characterizations of a rank-1 equilibrium."""

    @settings(max_examples=150, deadline=None)
    @given(games_with_profiles())
    def test_three_way_agreement(self, data):
        """Test that the three characterizations agree on arbitrary profiles."""
        A, C, a, b, profile = data
        assert check_lemma_equiv(A, C, a, b, profile).agree()

    @pytest.mark.parametrize("seed", range(20))
    def test_agreement_at_equilibria(self, seed):
        """Test that all three hold at the extreme equilibria of random games."""
        game = gen_random_rank1(2, 3, 9, seed)
        C = -game.A
        for profile in support_enumeration(game.to_game()):
            check = check_lemma_equiv(game.A, C, game.a, game.b, profile)
            assert check.original and check.parameterized and check.shifted


class TestSupportEnumeration:
    """Test cases for the brute-force oracle."""

    def test_worked_example(self):
        """Test the three equilibria of the worked example."""
        assert support_enumeration(ex1()) == [
            MixedProfile.of([0, 1], [0, 1]),
            MixedProfile.of([F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)]),
            MixedProfile.of([1, 0], [1, 0]),
        ]

    def test_rank_two_fixture(self):
        """Test that the rank-2 fixture has a single equilibrium."""
        assert support_enumeration(ex3()) == [MixedProfile.of([1, 0], [1, 0])]

    def test_parameterized_fixture(self):
        """Test that every oracle profile of param-N2 passes is_nash."""
        game = param_n2(F(-3, 2))
        for profile in support_enumeration(game):
            assert is_nash(game, profile)

    def test_size_limit(self):
        """Test that games above the size limit are refused."""
        game = Game(RatMatrix.zeros(3, 3), RatMatrix.zeros(3, 3))
        with pytest.raises(LimitExceeded):
            SupportEnumerator(OracleConfig(size_limit=2)).extreme_equilibria(game)

    def test_polyhedron_vertices(self):
        """Test the best-response polyhedron of the worked example's row player."""
        vertices = polyhedron_vertices(ex1().B)
        assert [v[:-1] for v in vertices] == [(F(0), F(1)), (F(1, 4), F(3, 4)), (F(1), F(0))]


class TestDegeneracy:
    """Test cases for degeneracy detection."""

    def test_nondegenerate(self):
        """Test the worked example and the rank-2 fixture."""
        assert not is_degenerate(ex1())
        assert not is_degenerate(ex3())

    def test_degenerate(self, all_profiles_game):
        """Test a game where every strategy is always a best response."""
        assert is_degenerate(all_profiles_game.to_game())

    def test_known_games(self):
        """Test the exponential family, the degenerate param-N2(0) and matching pennies."""
        assert not any(is_degenerate(gen_expo(ExpoParams(n))) for n in range(1, 5))
        assert is_degenerate(param_n2(0))
        pennies = RatMatrix.from_rows([[1, -1], [-1, 1]])
        assert not is_degenerate(Game(pennies, -pennies))
        assert support_enumeration(Game(pennies, -pennies)) == [
            MixedProfile.of([F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)])
        ]


class TestLemmaExamples:
    """Test cases for check_lemma_equiv on the worked example."""

    def test_mixed_equilibrium(self, ex1_game):
        """Test that all three hold at the mixed equilibrium with λ = −1/4."""
        profile = MixedProfile.of([F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)])
        assert check_lemma_equiv(ex1_game.A, -ex1_game.A, ex1_game.a, ex1_game.b, profile) == (True, True, True)

    def test_non_equilibrium(self, ex1_game):
        """Test that all three fail off equilibrium."""
        profile = MixedProfile.of([1, 0], [0, 1])
        assert check_lemma_equiv(ex1_game.A, -ex1_game.A, ex1_game.a, ex1_game.b, profile) == (False, False, False)
