"""
Game/equilibrium homeomorphisms with exact round trips.
"""

from .maps import (
    EquilibriumPoint,
    GamePair,
    KmDecomposition,
    PsiDecomposition,
    WaterLevelResult,
    km_decompose,
    km_forward,
    km_inverse,
    psi_decompose,
    psi_forward,
    psi_inverse,
    psi_reassemble,
    rho,
    sigma,
    water_level,
)
