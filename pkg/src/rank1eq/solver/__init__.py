"""
Equilibrium computation for rank-1 games.
"""

from .binsearch import BinarySearchSolver, SearchState, binsearch, binsearch_factored
from .enumerate import (
    EquilibriumEnumerator,
    enumerate_all,
    subset_vertices,
    x_face_vertices,
    y_face_vertices,
)
