"""Cramer's rule for right systems A x = y and left systems x A = y."""

from __future__ import annotations

from ncdet.algebra.scalars import Scalar, is_zero_scalar
from ncdet.determinants.double import ddet
from ncdet.determinants.hermitian import hermitian_det, require_hermitian
from ncdet.determinants.rowcol import cdet, rdet
from ncdet.errors import ShapeError, SingularMatrixError
from ncdet.matrix.qmatrix import QMatrix


def _check_right(A: QMatrix, y: QMatrix) -> int:
    n = A.require_square("solve_right")
    if y.shape != (n, 1):
        raise ShapeError(f"Right system with {n}x{n} A needs an {n}x1 column, got {y.shape}.")
    return n


def _check_left(A: QMatrix, y: QMatrix) -> int:
    n = A.require_square("solve_left")
    if y.shape != (1, n):
        raise ShapeError(f"Left system with {n}x{n} A needs a 1x{n} row, got {y.shape}.")
    return n


def _nonzero(d: Scalar, what: str) -> Scalar:
    if is_zero_scalar(d):
        raise SingularMatrixError(f"{what} = 0; the system has no unique solution.")
    return d


def solve_right(A: QMatrix, y: QMatrix) -> QMatrix:
    """x_j = cdet_j (A*A)_{.j}(f) / ddet A with f = A* y.

    Raises:
        ShapeError: y is not an n x 1 column.
        SingularMatrixError: ddet A = 0.
    """
    n = _check_right(A, y)
    d = _nonzero(ddet(A), "ddet A")
    adj = A.adjoint()
    hermitian = adj @ A
    f = adj @ y
    x = [cdet(hermitian.replace_col(j, f), j) / d for j in range(n)]
    return QMatrix.column(x, A.params)


def solve_left(A: QMatrix, y: QMatrix) -> QMatrix:
    """x_i = rdet_i (AA*)_{i.}(z) / ddet A with z = y A*."""
    n = _check_left(A, y)
    d = _nonzero(ddet(A), "ddet A")
    adj = A.adjoint()
    hermitian = A @ adj
    z = y @ adj
    x = [rdet(hermitian.replace_row(i, z), i) / d for i in range(n)]
    return QMatrix.row(x, A.params)


def solve_right_hermitian(A: QMatrix, y: QMatrix) -> QMatrix:
    """x_j = cdet_j A_{.j}(y) / det A for Hermitian A."""
    require_hermitian(A, "solve_right_hermitian")
    n = _check_right(A, y)
    d = _nonzero(hermitian_det(A), "det A")
    return QMatrix.column([cdet(A.replace_col(j, y), j) / d for j in range(n)], A.params)


def solve_left_hermitian(A: QMatrix, y: QMatrix) -> QMatrix:
    """x_i = rdet_i A_{i.}(y) / det A for Hermitian A."""
    require_hermitian(A, "solve_left_hermitian")
    n = _check_left(A, y)
    d = _nonzero(hermitian_det(A), "det A")
    return QMatrix.row([rdet(A.replace_row(i, y), i) / d for i in range(n)], A.params)
