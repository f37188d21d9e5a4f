"""Generalized quaternion algebra H(a,b) over the base field.

Basis {1, i, j, k} with i^2 = a, j^2 = b, ij = k, ji = -k. The remaining
products follow from associativity:

    k^2 = -ab,  ik = aj,  ki = -aj,  kj = bi,  jk = -bi
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ncdet.algebra.scalars import (
    Scalar,
    ScalarKind,
    format_scalar,
    is_zero_scalar,
    parse_scalar,
    scalars_close,
    to_scalar,
)
from ncdet.errors import AlgebraMismatchError, NcdetError, NotInvertibleError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraParams:
    """The pair (a, b) fixing the multiplication table, plus the scalar backend.

    Attributes:
        a: i^2.
        b: j^2.
        kind: Scalar backend shared by every quaternion of this algebra.
    """

    a: Scalar
    b: Scalar
    kind: ScalarKind = ScalarKind.RATIONAL

    def __post_init__(self) -> None:
        kind = ScalarKind(self.kind)
        a = to_scalar(self.a, kind)
        b = to_scalar(self.b, kind)
        if is_zero_scalar(a) or is_zero_scalar(b):
            raise NcdetError(f"Degenerate algebra H({a}, {b}): a and b must be nonzero.")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if kind is ScalarKind.FLOAT64:
            logger.debug("Float64 backend selected for H(%s, %s)", a, b)

    @classmethod
    def hamilton(cls, kind: ScalarKind = ScalarKind.RATIONAL) -> AlgebraParams:
        """H(-1, -1), the classical quaternions over the chosen field."""
        return cls(-1, -1, kind)

    @property
    def positive_definite(self) -> bool:
        """True when a < 0 and b < 0: the norm is positive definite, so every
        nonzero quaternion is invertible."""
        return self.a < 0 and self.b < 0

    def to_dict(self) -> dict[str, str]:
        return {"a": format_scalar(self.a), "b": format_scalar(self.b)}

    @classmethod
    def from_dict(cls, d: dict, kind: ScalarKind = ScalarKind.RATIONAL) -> AlgebraParams:
        try:
            a, b = d["a"], d["b"]
        except (KeyError, TypeError) as exc:
            raise ParseError(
                f"Algebra must be an object with keys 'a' and 'b', got {d!r}."
            ) from exc
        try:
            return cls(parse_scalar(str(a), kind), parse_scalar(str(b), kind), kind)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc)) from exc

    def __str__(self) -> str:
        return f"H({format_scalar(self.a)}, {format_scalar(self.b)})"


def _check_same_algebra(p: Quaternion, q: Quaternion) -> None:
    if p.params is not q.params and p.params != q.params:
        raise AlgebraMismatchError(
            f"Quaternions from {p.params} and {q.params} do not interoperate."
        )


@dataclass(frozen=True, eq=False)
class Quaternion:
    """x0 + x1 i + x2 j + x3 k in H(a,b).

    Equality is exact in rational mode and tolerance-based in float mode;
    float-mode quaternions are therefore unhashable.
    """

    x0: Scalar
    x1: Scalar
    x2: Scalar
    x3: Scalar
    params: AlgebraParams

    @classmethod
    def of(
        cls, x0: object, x1: object, x2: object, x3: object, params: AlgebraParams
    ) -> Quaternion:
        """Build from arbitrary scalar-like values, coerced to the algebra's backend."""
        kind = params.kind
        return cls(
            to_scalar(x0, kind), to_scalar(x1, kind), to_scalar(x2, kind), to_scalar(x3, kind),
            params,
        )

    @classmethod
    def scalar(cls, value: object, params: AlgebraParams) -> Quaternion:
        return cls.of(value, 0, 0, 0, params)

    @classmethod
    def zero(cls, params: AlgebraParams) -> Quaternion:
        return cls.scalar(0, params)

    @classmethod
    def one(cls, params: AlgebraParams) -> Quaternion:
        return cls.scalar(1, params)

    @classmethod
    def basis(cls, name: str, params: AlgebraParams) -> Quaternion:
        """Basis element "1", "i", "j" or "k"."""
        coords = {"1": (1, 0, 0, 0), "i": (0, 1, 0, 0), "j": (0, 0, 1, 0), "k": (0, 0, 0, 1)}
        if name not in coords:
            raise ValueError(f"Unknown basis element {name!r}.")
        return cls.of(*coords[name], params)

    @classmethod
    def parse(cls, text: str, params: AlgebraParams) -> Quaternion:
        """Parse the textual form "x0,x1,x2,x3"."""
        fields = text.split(",")
        if len(fields) != 4:
            raise ParseError(f"Quaternion needs four comma-separated fields, got {text!r}.")
        x0, x1, x2, x3 = (parse_scalar(f, params.kind) for f in fields)
        return cls(x0, x1, x2, x3, params)

    @property
    def coords(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def real_part(self) -> Scalar:
        return self.x0

    @property
    def is_zero(self) -> bool:
        return all(is_zero_scalar(x) for x in self.coords)

    @property
    def is_real(self) -> bool:
        """True if the imaginary part vanishes (the quaternion lies in F)."""
        return is_zero_scalar(self.x1) and is_zero_scalar(self.x2) and is_zero_scalar(self.x3)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other: object) -> Quaternion:
        if isinstance(other, Quaternion):
            _check_same_algebra(self, other)
            return other
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return Quaternion.scalar(other, self.params)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> Quaternion:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        return Quaternion(
            self.x0 + q.x0, self.x1 + q.x1, self.x2 + q.x2, self.x3 + q.x3, self.params
        )

    __radd__ = __add__

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3, self.params)

    def __sub__(self, other: object) -> Quaternion:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        return Quaternion(
            self.x0 - q.x0, self.x1 - q.x1, self.x2 - q.x2, self.x3 - q.x3, self.params
        )

    def __rsub__(self, other: object) -> Quaternion:
        q = self._lift(other)
        if q is NotImplemented:
            return NotImplemented
        return q - self

    def __mul__(self, other: object) -> Quaternion:
        if isinstance(other, Quaternion):
            return qmul(self, other)
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> Quaternion:
        # only field scalars reach here; they are central
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: object) -> Quaternion:
        """Division by a base-field scalar. Use qinv for quaternion divisors."""
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            s = to_scalar(other, self.params.kind)
            if is_zero_scalar(s):
                raise NotInvertibleError("Division by a zero scalar.")
            return self.scale(1 / s)
        return NotImplemented

    def scale(self, s: object) -> Quaternion:
        """Multiply every coordinate by a base-field scalar."""
        c = to_scalar(s, self.params.kind)
        return Quaternion(self.x0 * c, self.x1 * c, self.x2 * c, self.x3 * c, self.params)

    def conj(self) -> Quaternion:
        return conj(self)

    def trace(self) -> Quaternion:
        return trace(self)

    def norm(self) -> Scalar:
        return norm(self)

    def inverse(self) -> Quaternion:
        return qinv(self)

    # -- equality / text ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, float)) and not isinstance(other, bool):
            other = Quaternion.scalar(other, self.params)
        if not isinstance(other, Quaternion):
            return NotImplemented
        if self.params != other.params:
            return False
        return all(scalars_close(x, y) for x, y in zip(self.coords, other.coords))

    def __hash__(self) -> int:
        if self.params.kind is ScalarKind.FLOAT64:
            raise TypeError("float-mode quaternions are unhashable")
        return hash((self.coords, self.params))

    def __str__(self) -> str:
        return ",".join(format_scalar(x) for x in self.coords)

    def __repr__(self) -> str:
        return f"Quaternion({self}; {self.params})"


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Product p*q using the full table of H(a,b)."""
    _check_same_algebra(p, q)
    a, b = p.params.a, p.params.b
    x0, x1, x2, x3 = p.x0, p.x1, p.x2, p.x3
    y0, y1, y2, y3 = q.x0, q.x1, q.x2, q.x3
    return Quaternion(
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        p.params,
    )


def conj(q: Quaternion) -> Quaternion:
    """Involution t(q) - q = (x0, -x1, -x2, -x3)."""
    return Quaternion(q.x0, -q.x1, -q.x2, -q.x3, q.params)


def trace(q: Quaternion) -> Quaternion:
    """t(q) = q + conj(q) = 2*x0, as a quaternion with zero imaginary part."""
    return Quaternion.scalar(2 * q.x0, q.params)


def norm(q: Quaternion) -> Scalar:
    """n(q) = q*conj(q) = x0^2 - a*x1^2 - b*x2^2 + ab*x3^2."""
    a, b = q.params.a, q.params.b
    return q.x0 * q.x0 - a * q.x1 * q.x1 - b * q.x2 * q.x2 + a * b * q.x3 * q.x3


def qinv(q: Quaternion) -> Quaternion:
    """conj(q) / n(q).

    Raises:
        NotInvertibleError: n(q) = 0 (q is zero or a zero divisor).
    """
    n = norm(q)
    if is_zero_scalar(n):
        raise NotInvertibleError(f"Quaternion {q} has zero norm in {q.params}.", witness=str(q))
    return conj(q).scale(1 / n)
