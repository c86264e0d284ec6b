"""
Exception hierarchy for the rank-1 equilibrium suite.
"""

from typing import Optional


class Rank1EqError(Exception):
    """Base class for all library errors."""


class DimensionError(Rank1EqError, ValueError):
    """Operands have incompatible shapes."""


class RankError(Rank1EqError):
    """A matrix has the wrong rank for the requested operation."""

    def __init__(self, message: str, rank: Optional[int] = None):
        super().__init__(message)
        self.rank = rank


class EmptyFace(Rank1EqError):
    """A polyhedral face that must be nonempty turned out infeasible."""


class LimitExceeded(Rank1EqError):
    """A brute-force search was asked to go beyond its configured size limit."""

    def __init__(self, size: int, limit: int, what: str = "game dimension"):
        super().__init__(f"{what} {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class NotAnEquilibrium(Rank1EqError):
    """A profile passed where a Nash equilibrium is required is not one."""


class SumMismatch(Rank1EqError):
    """Payoff matrices do not add up to the required sum matrix."""


class GameFormatError(Rank1EqError, ValueError):
    """Malformed game file or rational literal."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownFixture(Rank1EqError, KeyError):
    """Requested fixture name is not known."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown fixture"


class SearchDiverged(Rank1EqError):
    """Binary search exceeded its iteration guard."""


class CertificateError(Rank1EqError):
    """An LP solution failed exact certificate verification."""


class VerificationFailed(Rank1EqError):
    """A solver returned a profile that fails the exact equilibrium check."""
