"""Double determinant, double cofactors and the inverse matrix.

ddet A = det(A* A). A is invertible iff ddet A != 0, and then

    (A^-1)_ji = L_ij / ddet A = R_ij / ddet A

with the left double cofactor L_ij = cdet_j (A*A)_{.j}(a*_{.i}) and the
right double cofactor R_ij = rdet_i (AA*)_{i.}(a*_{j.}).
"""

from __future__ import annotations

import logging
from typing import Literal

from ncdet import config
from ncdet.algebra.quaternion import Quaternion
from ncdet.algebra.scalars import Scalar, format_scalar, is_zero_scalar, scalars_close
from ncdet.determinants.hermitian import hermitian_det
from ncdet.determinants.rowcol import cdet, rdet
from ncdet.errors import InternalDisagreementError, SingularMatrixError
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)

Form = Literal["left", "right"]


def ddet(A: QMatrix, *, cross_check: bool | None = None) -> Scalar:
    """Double determinant det(A*A).

    With ``cross_check`` (default ``config.CROSS_CHECK``) det(AA*) is
    computed as well and must agree.
    """
    A.require_square("ddet")
    adj = A.adjoint()
    value = hermitian_det(adj @ A)
    if config.CROSS_CHECK if cross_check is None else cross_check:
        other = hermitian_det(A @ adj)
        if not scalars_close(value, other):
            raise InternalDisagreementError(
                f"det(A*A) = {format_scalar(value)} but det(AA*) = {format_scalar(other)}",
                witness=str(A),
            )
    return value


def left_double_cofactor(A: QMatrix, i: int, j: int) -> Quaternion:
    adj = A.adjoint()
    return cdet((adj @ A).replace_col(j, adj.col_at(i)), j)


def right_double_cofactor(A: QMatrix, i: int, j: int) -> Quaternion:
    adj = A.adjoint()
    return rdet((A @ adj).replace_row(i, adj.row_at(j)), i)


def _cofactor_table(A: QMatrix, form: Form) -> list[list[Quaternion]]:
    n = A.rows
    adj = A.adjoint()
    if form == "left":
        left_hermitian = adj @ A
        return [
            [cdet(left_hermitian.replace_col(j, adj.col_at(i)), j) for j in range(n)]
            for i in range(n)
        ]
    right_hermitian = A @ adj
    return [
        [rdet(right_hermitian.replace_row(i, adj.row_at(j)), i) for j in range(n)]
        for i in range(n)
    ]


def double_cofactors(A: QMatrix) -> tuple[QMatrix, QMatrix]:
    """Both n x n tables (L, R) with L[i, j] = L_ij and R[i, j] = R_ij."""
    A.require_square("double_cofactors")
    return (
        QMatrix.from_rows(_cofactor_table(A, "left"), A.params),
        QMatrix.from_rows(_cofactor_table(A, "right"), A.params),
    )


def double_adjoint(A: QMatrix, form: Form = "left") -> QMatrix:
    """The matrix with the double cofactor of (i, j) placed at (j, i).

    A^-1 = double_adjoint(A) / ddet A.
    """
    n = A.require_square("double_adjoint")
    table = _cofactor_table(A, form)
    return QMatrix.from_rows([[table[i][j] for i in range(n)] for j in range(n)], A.params)


def inverse(A: QMatrix, *, form: Form = "left", cross_check: bool = False) -> QMatrix:
    """A^-1 from double cofactors.

    With ``cross_check`` the other form is built too and must agree.

    Raises:
        SingularMatrixError: ddet A = 0.
    """
    n = A.require_square("inverse")
    d = ddet(A, cross_check=cross_check)
    if is_zero_scalar(d):
        raise SingularMatrixError(f"{n}x{n} matrix has ddet = 0.", witness=str(A))
    result = double_adjoint(A, form).scale(1 / d)
    if cross_check:
        other = double_adjoint(A, "right" if form == "left" else "left").scale(1 / d)
        if other != result:
            raise InternalDisagreementError(
                "Left and right double cofactors differ on an invertible matrix.", witness=str(A)
            )
    logger.debug("Inverted %dx%d matrix, ddet = %s", n, n, format_scalar(d))
    return result
