"""
Brute-force equilibrium oracle for small games.

For every pair of supports (I, J) the row player's candidate set is the face

    {(x, v) | 1ᵀx = 1, x ≥ 0, x_i = 0 for i ∉ I, (Bᵀx)_j = v for j ∈ J, (Bᵀx)_j ≤ v}

of the best-response polyhedron, and symmetrically for the column player.
Every pair of vertices of the two faces is an extreme equilibrium, and every
extreme equilibrium arises this way. Solution sets of singular indifference
systems are handled by enumerating their vertices, so degenerate games are
covered.
"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from ..config import OracleConfig
from ..core.errors import LimitExceeded
from ..core.matrix import RatMatrix
from ..core.models import Game, MixedProfile
from ..core.polytope import Halfspace, polytope_vertices
from ..core.rational import ONE, ZERO, Vector, dot, support, unit
from ..utils.metrics import record_support_pairs


def _nonempty_subsets(k: int) -> Iterator[Tuple[int, ...]]:
    for size in range(1, k + 1):
        yield from combinations(range(k), size)


def _response_face(
    payoffs: RatMatrix, own: Sequence[int], other: Sequence[int], max_subsets: Optional[int]
) -> List[Vector]:
    """
    Vertices (strategy, value) of one player's face for supports (own, other).

    ``payoffs`` maps the player's strategy z to the opponent's payoff vector
    as zᵀ·payoffs (so it is B for the row player and Aᵀ for the column player).
    """
    k, r = payoffs.rows, payoffs.cols
    nvars = k + 1
    own_set, other_set = set(own), set(other)
    eqs: List[Halfspace] = [((ONE,) * k + (ZERO,), ONE)]
    ineqs: List[Halfspace] = []
    for i in range(k):
        if i in own_set:
            ineqs.append((tuple(-e for e in unit(k, i)) + (ZERO,), ZERO))
        else:
            eqs.append((unit(k, i) + (ZERO,), ZERO))
    for j in range(r):
        row = payoffs.column(j) + (-ONE,)
        if j in other_set:
            eqs.append((row, ZERO))
        else:
            ineqs.append((row, ZERO))
    return polytope_vertices(nvars, eqs, ineqs, max_subsets)


def polyhedron_vertices(payoffs: RatMatrix, max_subsets: Optional[int] = None) -> List[Vector]:
    """Vertices (z, w) of {1ᵀz = 1, z ≥ 0, zᵀ·payoffs ≤ w·1ᵀ}."""
    k, r = payoffs.rows, payoffs.cols
    eqs: List[Halfspace] = [((ONE,) * k + (ZERO,), ONE)]
    ineqs: List[Halfspace] = [(tuple(-e for e in unit(k, i)) + (ZERO,), ZERO) for i in range(k)]
    ineqs += [(payoffs.column(j) + (-ONE,), ZERO) for j in range(r)]
    return polytope_vertices(k + 1, eqs, ineqs, max_subsets)


class SupportEnumerator:
    """
    Exhaustive equilibrium oracle over all support pairs.
    """

    def __init__(self, config: Optional[OracleConfig] = None):
        self.config = config or OracleConfig()
        self.logger = logging.getLogger(__name__)

    def _check_size(self, game: Game) -> None:
        size = max(game.m, game.n)
        if size > self.config.size_limit:
            raise LimitExceeded(size, self.config.size_limit)

    def extreme_equilibria(self, game: Game) -> List[MixedProfile]:
        """All extreme equilibria, deduplicated and sorted by (x, y)."""
        self._check_size(game)
        limit = self.config.max_tight_subsets
        row_payoffs = game.B           # xᵀB: column player's payoffs
        col_payoffs = game.A.transpose()  # yᵀAᵀ: row player's payoffs
        found: Set[Tuple[Vector, Vector]] = set()
        pairs = 0
        for rows in _nonempty_subsets(game.m):
            for cols in _nonempty_subsets(game.n):
                pairs += 1
                ys = _response_face(col_payoffs, cols, rows, limit)
                if not ys:
                    continue
                xs = _response_face(row_payoffs, rows, cols, limit)
                for x in xs:
                    for y in ys:
                        found.add((x[:-1], y[:-1]))
        record_support_pairs(pairs)
        self.logger.debug(f"Support enumeration on {game.m}x{game.n}: {pairs} pairs, {len(found)} equilibria")
        return [MixedProfile(x, y) for x, y in sorted(found)]

    def is_degenerate(self, game: Game) -> bool:
        """
        True iff some vertex of a best-response polyhedron has more pure best
        responses than its support size.
        """
        self._check_size(game)
        limit = self.config.max_tight_subsets
        for payoffs in (game.B, game.A.transpose()):
            for vertex in polyhedron_vertices(payoffs, limit):
                z, w = vertex[:-1], vertex[-1]
                best = sum(1 for j in range(payoffs.cols) if dot(z, payoffs.column(j)) == w)
                if best > len(support(z)):
                    return True
        return False


def support_enumeration(game: Game, config: Optional[OracleConfig] = None) -> List[MixedProfile]:
    """All extreme equilibria of a small game."""
    return SupportEnumerator(config).extreme_equilibria(game)


def is_degenerate(game: Game, config: Optional[OracleConfig] = None) -> bool:
    return SupportEnumerator(config).is_degenerate(game)
