"""
Exact numeric core: rationals, matrices, game models and errors.
"""

from .errors import (
    CertificateError,
    DimensionError,
    EmptyFace,
    GameFormatError,
    LimitExceeded,
    NotAnEquilibrium,
    Rank1EqError,
    RankError,
    SearchDiverged,
    SumMismatch,
    UnknownFixture,
    VerificationFailed,
)
from .matrix import (
    RankOneFactorization,
    RatMatrix,
    factor_rank_one,
    matrix_rank,
    shift_columns,
)
from .models import (
    EquilibriumRecord,
    Game,
    LambdaInterval,
    MixedProfile,
    NashSubset,
    RankOneGame,
    SubsetKind,
    TrueInequalities,
    as_rank_one,
)
