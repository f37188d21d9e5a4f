"""Base field F: exact rationals (default) or binary floating point (opt-in)."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Union

from ncdet import config
from ncdet.errors import AlgebraMismatchError, ParseError

Scalar = Union[Fraction, float]


class ScalarKind(str, Enum):
    """Scalar backend tag, fixed when an algebra is constructed."""

    RATIONAL = "rational"
    FLOAT64 = "float64"


def to_scalar(value: object, kind: ScalarKind) -> Scalar:
    """Coerce an int, Fraction, float or text into the given backend.

    Floats are never silently promoted to rationals.
    """
    if isinstance(value, str):
        return parse_scalar(value, kind)
    if kind is ScalarKind.RATIONAL:
        if isinstance(value, bool) or isinstance(value, float):
            raise AlgebraMismatchError(
                f"Cannot use float {value!r} in rational mode; pass an int, Fraction or text."
            )
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
    else:
        if isinstance(value, (int, Fraction, float)) and not isinstance(value, bool):
            return float(value)
    raise AlgebraMismatchError(f"Unsupported scalar {value!r} for backend {kind.value}.")


def parse_scalar(text: str, kind: ScalarKind) -> Scalar:
    """Parse "p", "p/q" (and, in float mode, decimal literals)."""
    token = text.strip()
    if not token:
        raise ParseError("Empty scalar field.")
    try:
        if kind is ScalarKind.RATIONAL:
            if any(ch in token for ch in ".eE"):
                raise ParseError(f"Rational field expected, got decimal {token!r}.")
            return Fraction(token)
        if "/" in token:
            return float(Fraction(token))
        return float(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Cannot parse scalar {token!r}: {exc}") from exc


def format_scalar(value: Scalar) -> str:
    """Lowest-terms "p" or "p/q" for rationals, repr for floats."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def is_zero_scalar(value: Scalar) -> bool:
    """Exact test for rationals, tolerance test for floats."""
    if isinstance(value, Fraction):
        return value == 0
    return abs(value) <= config.FLOAT_TOLERANCE


def scalars_close(x: Scalar, y: Scalar) -> bool:
    """Equality in the backend's sense: exact, or |x-y| <= tol*(1+max|.|)."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    scale = 1.0 + max(abs(float(x)), abs(float(y)))
    return abs(float(x) - float(y)) <= config.FLOAT_TOLERANCE * scale


def scalar_kind_of(value: Scalar) -> ScalarKind:
    return ScalarKind.RATIONAL if isinstance(value, Fraction) else ScalarKind.FLOAT64
