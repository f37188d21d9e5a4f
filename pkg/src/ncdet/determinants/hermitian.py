"""Determinant of Hermitian matrices: Moore recursion, the common value of all
2n row/column determinants, and inversion through ordinary cofactors."""

from __future__ import annotations

import logging
from typing import Literal

from ncdet import config
from ncdet.algebra.quaternion import Quaternion
from ncdet.algebra.scalars import Scalar, is_zero_scalar
from ncdet.determinants.rowcol import cdet, left_cofactor, rdet, right_cofactor
from ncdet.errors import InternalDisagreementError, NotHermitianError, SingularMatrixError
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)


def require_hermitian(A: QMatrix, what: str) -> int:
    n = A.require_square(what)
    if not A.is_hermitian():
        raise NotHermitianError(f"{what} needs a Hermitian matrix (a_ij = conj(a_ji)).")
    return n


def _moore(A: QMatrix, row: int) -> Quaternion:
    """Expand along ``row``, then along the row labelled by the chosen column.

    Choosing column j != row continues with the row originally labelled j in
    A(row -> j); choosing j == row closes the current cycle and the expansion
    restarts at the smallest remaining label.
    """
    n = A.rows
    if n == 1:
        return A[0, 0]
    total = Quaternion.zero(A.params)
    for j in range(n):
        minor = A.col_replace_then_delete(row, j)
        if j == row:
            total = total + A[row, j] * _moore(minor, 0)
        else:
            total = total - A[row, j] * _moore(minor, j if j < row else j - 1)
    return total


def mdet(A: QMatrix) -> Quaternion:
    """Moore determinant of a Hermitian matrix.

    Raises:
        NotHermitianError: A is not Hermitian.
    """
    require_hermitian(A, "mdet")
    return _moore(A, 0)


def hermitian_det(A: QMatrix, *, check: bool | None = None) -> Scalar:
    """det A of a Hermitian matrix as a base-field scalar.

    Computes rdet_1 A. With ``check`` (default ``config.CHECK_HERMITIAN``)
    every other rdet_i and cdet_j is computed too and must agree.

    Raises:
        NotHermitianError: A is not Hermitian.
        InternalDisagreementError: two of the determinants differ, or the
            value has a nonzero imaginary part.
    """
    n = require_hermitian(A, "hermitian_det")
    value = rdet(A, 0)
    if not value.is_real:
        raise InternalDisagreementError(
            f"rdet_1 of a Hermitian matrix has imaginary part: {value}", witness=str(A)
        )
    if config.CHECK_HERMITIAN if check is None else check:
        for k in range(n):
            for name, other in ((f"rdet_{k + 1}", rdet(A, k)), (f"cdet_{k + 1}", cdet(A, k))):
                if other != value:
                    raise InternalDisagreementError(
                        f"Hermitian determinants disagree: rdet_1 = {value}, {name} = {other}",
                        witness=str(A),
                    )
        logger.debug("All %d determinants of a %dx%d Hermitian matrix agree", 2 * n, n, n)
    return value.real_part


def hermitian_inverse(A: QMatrix, form: Literal["right", "left"] = "right") -> QMatrix:
    """Inverse of a nonsingular Hermitian matrix through ordinary cofactors.

    The right form puts R_ij / det A in position (j, i); the left form puts
    L_ij / det A there.

    Raises:
        SingularMatrixError: det A = 0.
    """
    n = require_hermitian(A, "hermitian_inverse")
    d = hermitian_det(A)
    if is_zero_scalar(d):
        raise SingularMatrixError("Hermitian matrix has det = 0.", witness=str(A))
    if n == 1:
        return QMatrix.from_rows([[Quaternion.one(A.params) / d]], A.params)
    cofactor = right_cofactor if form == "right" else left_cofactor
    rows = [[cofactor(A, i, j) / d for i in range(n)] for j in range(n)]
    return QMatrix.from_rows(rows, A.params)
