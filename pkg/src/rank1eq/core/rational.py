"""
Exact rational scalars and vectors.

Scalars are ``fractions.Fraction`` values (always kept in lowest terms with a
positive denominator). Vectors are plain tuples of Fractions.
"""

from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Tuple

from .errors import DimensionError, GameFormatError

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_MINUS_SIGNS = ("−", "–")


def to_fraction(value: Any) -> Fraction:
    """Convert ints, Fractions and rational literals to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        # exact binary value of the float, no rounding
        return Fraction(value)
    try:
        return Fraction(int(value))
    except (TypeError, ValueError) as e:
        raise TypeError(f"cannot convert {value!r} to a rational") from e


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p" or a decimal literal, accepting a unicode minus sign."""
    cleaned = text.strip()
    for sign in _MINUS_SIGNS:
        cleaned = cleaned.replace(sign, "-")
    if not cleaned:
        raise GameFormatError("empty rational literal")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise GameFormatError(f"invalid rational {text!r}: {e}") from e


def format_rational(value: Fraction, approx: bool = False) -> str:
    """Canonical "p/q" text (q omitted when 1), optionally with a decimal hint."""
    text = str(value)
    if approx and value.denominator != 1:
        text += f" (~{float(value):.6g})"
    return text


def vector(values: Iterable[Any]) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def ones(n: int) -> Vector:
    return (ONE,) * n


def _check_same_length(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} != {len(v)}")


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    _check_same_length(u, v)
    total = ZERO
    for p, q in zip(u, v):
        if p and q:
            total += p * q
    return total


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    _check_same_length(u, v)
    return tuple(p + q for p, q in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    _check_same_length(u, v)
    return tuple(p - q for p, q in zip(u, v))


def vscale(q: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(q * x for x in v)


def mean(v: Sequence[Fraction]) -> Fraction:
    if not v:
        raise DimensionError("mean of an empty vector")
    return sum(v, ZERO) / len(v)


def center(v: Sequence[Fraction]) -> Vector:
    """Subtract the mean from every component (result sums to zero)."""
    mu = mean(v)
    return tuple(x - mu for x in v)


def support(v: Sequence[Fraction]) -> Tuple[int, ...]:
    return tuple(i for i, x in enumerate(v) if x != 0)


def is_distribution(v: Sequence[Fraction]) -> bool:
    """True if v is a point of the probability simplex."""
    return len(v) > 0 and all(x >= 0 for x in v) and sum(v, ZERO) == ONE


def parse_vector(text: str, expected: Optional[int] = None) -> Vector:
    """Parse a comma or whitespace separated list of rationals."""
    parts = [p for p in text.replace(",", " ").split() if p]
    result = tuple(parse_rational(p) for p in parts)
    if expected is not None and len(result) != expected:
        raise GameFormatError(f"expected {expected} entries, got {len(result)}")
    return result


def format_vector(v: Sequence[Fraction], approx: bool = False) -> str:
    return "(" + ", ".join(format_rational(x, approx) for x in v) + ")"
