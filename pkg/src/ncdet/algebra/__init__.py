"""Base field and quaternion algebra H(a,b)."""

from ncdet.algebra.quaternion import AlgebraParams, Quaternion, conj, norm, qinv, qmul, trace
from ncdet.algebra.scalars import (
    Scalar,
    ScalarKind,
    format_scalar,
    is_zero_scalar,
    parse_scalar,
    scalars_close,
    to_scalar,
)

__all__ = [
    "AlgebraParams",
    "Quaternion",
    "qmul",
    "conj",
    "trace",
    "norm",
    "qinv",
    "Scalar",
    "ScalarKind",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "is_zero_scalar",
    "scalars_close",
]
