"""
Vertex enumeration of bounded polyhedra {z | Ez = e, Gz ≤ g} by tight-set search.
"""

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

from .errors import LimitExceeded
from .matrix import row_reduce, solve_linear_system
from .rational import Vector, dot

Halfspace = Tuple[Sequence[Fraction], Fraction]


def satisfies(z: Sequence[Fraction], inequalities: Sequence[Halfspace]) -> bool:
    return all(dot(coeffs, z) <= rhs for coeffs, rhs in inequalities)


def polytope_vertices(
    nvars: int,
    equalities: Sequence[Halfspace],
    inequalities: Sequence[Halfspace],
    max_subsets: Optional[int] = None,
) -> List[Vector]:
    """
    All vertices of a bounded polyhedron, sorted lexicographically.

    For every choice of inequalities to make tight that brings the equality
    system to full rank, the square system is solved exactly and kept if it
    satisfies the remaining inequalities.
    """
    if equalities:
        reduced = row_reduce([c for c, _ in equalities], [r for _, r in equalities])
        if reduced is None:
            return []
        eq_rows, eq_rhs = reduced
    else:
        eq_rows, eq_rhs = [], []

    free_dims = nvars - len(eq_rows)
    # constraints with an all-zero row never cut out a vertex
    candidates = [k for k, (coeffs, _) in enumerate(inequalities) if any(c != 0 for c in coeffs)]
    if free_dims > len(candidates):
        return []
    count = comb(len(candidates), free_dims)
    if max_subsets is not None and count > max_subsets:
        raise LimitExceeded(count, max_subsets, what="tight-set count")

    found = set()
    for chosen in combinations(candidates, free_dims):
        rows = list(eq_rows) + [list(inequalities[k][0]) for k in chosen]
        rhs = list(eq_rhs) + [inequalities[k][1] for k in chosen]
        z = solve_linear_system(rows, rhs, nvars)
        if z is not None and satisfies(z, inequalities):
            found.add(z)
    return sorted(found)
