"""
Test suite for maximal Nash subset enumeration.
"""

from fractions import Fraction

import pytest

from rank1eq.config import EnumerationConfig
from rank1eq.core.errors import LimitExceeded
from rank1eq.core.models import LambdaInterval, MixedProfile, SubsetKind, TrueInequalities
from rank1eq.core.rational import dot, support
from rank1eq.generators import ExpoParams, expo_rank_one, gen_random_rank1
from rank1eq.oracle import is_degenerate, is_nash, support_enumeration
from rank1eq.solver import EquilibriumEnumerator, enumerate_all, x_face_vertices, y_face_vertices

F = Fraction


@pytest.fixture
def enumerator(config):
    """Create test enumerator."""
    return EquilibriumEnumerator(config.enumeration, config.lp)


class TestFaceVertices:
    """Test cases for the vertex lists of a face."""

    def test_y_face_at_breakpoint(self, ex1_ctx):
        """Test the Y-face at λ = 1/2 of the worked example."""
        face = TrueInequalities(frozenset({1}), frozenset({0, 1}))
        assert y_face_vertices(ex1_ctx, face) == [(F(1, 2), F(1, 2)), (F(1), F(0))]

    def test_x_face_cut_by_hyperplane(self, ex1_ctx, ex1_game):
        """Test the single x of the middle piece on xᵀa = λ."""
        face = TrueInequalities(frozenset(), frozenset({0, 1}))
        assert x_face_vertices(ex1_ctx, face, ex1_game.a) == [(F(1, 4), F(3, 4))]
        assert x_face_vertices(ex1_ctx, face, ex1_game.a, F(-1, 4)) == [(F(1, 4), F(3, 4))]
        assert x_face_vertices(ex1_ctx, face, ex1_game.a, F(0)) == []


class TestEnumeration:
    """Test cases for EquilibriumEnumerator."""

    def test_worked_example(self, enumerator, ex1_game):
        """Test the three isolated equilibria in ascending λ."""
        subsets = enumerator.enumerate(ex1_game)
        assert [s.kind for s in subsets] == [SubsetKind.INTERVAL] * 3
        assert [s.lambda_set for s in subsets] == [
            LambdaInterval(F(-1), F(-1)),
            LambdaInterval(F(-1, 4), F(-1, 4)),
            LambdaInterval(F(2), F(2)),
        ]
        assert [(s.x_vertices, s.y_vertices) for s in subsets] == [
            (((F(0), F(1)),), ((F(0), F(1)),)),
            (((F(1, 4), F(3, 4)),), ((F(1, 2), F(1, 2)),)),
            (((F(1), F(0)),), ((F(1), F(0)),)),
        ]

    def test_every_profile_an_equilibrium(self, enumerator, all_profiles_game):
        """Test A = 0, a = b = (1, 1): one subset covering both simplices."""
        subsets = enumerator.enumerate(all_profiles_game)
        assert len(subsets) == 1
        subset = subsets[0]
        assert subset.kind is SubsetKind.INTERVAL
        assert subset.lambda_set == LambdaInterval(F(1), F(1))
        assert subset.segment_range == LambdaInterval(None, None)
        assert subset.x_vertices == ((F(0), F(1)), (F(1), F(0)))
        assert subset.y_vertices == ((F(0), F(1)), (F(1), F(0)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_exponential_family(self, enumerator, n):
        """Test 2^n − 1 equilibria, each with equal supports."""
        game = expo_rank_one(ExpoParams(n))
        subsets = enumerator.enumerate(game)
        assert len(subsets) == 2 ** n - 1
        for subset in subsets:
            (x, y), = subset.extreme_pairs()
            assert is_nash(game.to_game(), MixedProfile(x, y))
            assert support(x) == support(y)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_exponential_family_large(self, enumerator, n):
        """Test the larger members of the exponential family."""
        subsets = enumerator.enumerate(expo_rank_one(ExpoParams(n)))
        assert len(subsets) == 2 ** n - 1

    def test_ascending_lambda(self, enumerator):
        """Test that subsets come out in ascending λ."""
        subsets = enumerator.enumerate(expo_rank_one(ExpoParams(4)))
        lows = [s.lambda_set.lower for s in subsets]
        assert lows == sorted(lows)

    def test_tight_subset_guard(self, ex1_game, lp_config):
        """Test that the vertex search budget is enforced."""
        with pytest.raises(LimitExceeded):
            enumerate_all(ex1_game, EnumerationConfig(max_tight_subsets=0), lp_config)

    @pytest.mark.parametrize("seed", range(200))
    def test_matches_oracle(self, enumerator, config, seed):
        """Test random rank-1 games against brute-force support enumeration."""
        m, n = 2 + seed % 3, 2 + (seed // 3) % 3
        game = gen_random_rank1(m, n, 9, seed)
        full = game.to_game()
        subsets = enumerator.enumerate(game)

        for subset in subsets:
            for x, y in subset.extreme_pairs():
                assert is_nash(full, MixedProfile(x, y))
                assert subset.lambda_set.contains(dot(x, game.a))

        found = {pair for subset in subsets for pair in subset.extreme_pairs()}
        extreme = support_enumeration(full, config.oracle)
        assert found == {(p.x, p.y) for p in extreme}

        if not is_degenerate(full, config.oracle):
            assert all(len(s.x_vertices) == len(s.y_vertices) == 1 for s in subsets)
            assert len(subsets) == len(extreme)
