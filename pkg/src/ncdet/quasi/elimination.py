"""Solving nonsingular systems without determinants.

``quasi_solve`` is Gauss-Jordan elimination with left row operations;
``solve_by_quasideterminants`` uses x_i = sum_j |A|_ji^-1 y_j.
"""

from __future__ import annotations

import logging

from ncdet.algebra.quaternion import Quaternion, norm, qinv
from ncdet.algebra.scalars import is_zero_scalar
from ncdet.errors import (
    EliminationStallError,
    ShapeError,
    SingularMatrixError,
    UndefinedValueError,
)
from ncdet.matrix.indexing import format_position, to_external
from ncdet.matrix.qmatrix import QMatrix
from ncdet.quasi.quasideterminant import quasideterminant

logger = logging.getLogger(__name__)


def quasi_solve(A: QMatrix, y: QMatrix) -> QMatrix:
    """Solve A x = y by elimination over H(a,b).

    In column k the pivot is the invertible candidate of largest |norm|
    (first one on ties); its row is left-multiplied by the pivot inverse and
    subtracted, left-scaled, from every other row.

    Raises:
        ShapeError: y is not an n x 1 column.
        SingularMatrixError: a column has no nonzero candidate.
        EliminationStallError: the nonzero candidates are all zero divisors.
    """
    n = A.require_square("quasi_solve")
    if y.shape != (n, 1):
        raise ShapeError(f"quasi_solve needs an {n}x1 column, got {y.shape}.")
    work: list[list[Quaternion]] = [row + [y[i, 0]] for i, row in enumerate(A.to_rows())]
    for k in range(n):
        candidates = [(abs(norm(work[r][k])), r) for r in range(k, n)]
        invertible = [(nv, r) for nv, r in candidates if not is_zero_scalar(nv)]
        if not invertible:
            if all(work[r][k].is_zero for r in range(k, n)):
                raise SingularMatrixError(
                    f"Column {to_external(k)} has no nonzero pivot candidate; A is singular."
                )
            certificate = QMatrix.column([work[r][k] for r in range(k, n)], A.params)
            logger.warning("Elimination stalled in column %d", to_external(k))
            raise EliminationStallError(
                f"Column {to_external(k)} has only zero-divisor candidates.",
                certificate=certificate,
            )
        best = max(nv for nv, _ in invertible)
        p = next(r for nv, r in invertible if nv == best)
        logger.debug("Pivot %s", format_position(p, k))
        work[k], work[p] = work[p], work[k]
        inv = qinv(work[k][k])
        work[k] = [inv * x for x in work[k]]
        for r in range(n):
            if r != k and not work[r][k].is_zero:
                factor = work[r][k]
                work[r] = [x - factor * pk for x, pk in zip(work[r], work[k])]
    return QMatrix.column([work[i][n] for i in range(n)], A.params)


def quasi_solve_left(A: QMatrix, y: QMatrix) -> QMatrix:
    """Solve x A = y through the adjoint system A* x* = y*."""
    n = A.require_square("quasi_solve_left")
    if y.shape != (1, n):
        raise ShapeError(f"quasi_solve_left needs a 1x{n} row, got {y.shape}.")
    return quasi_solve(A.adjoint(), y.adjoint()).adjoint()


def solve_by_quasideterminants(A: QMatrix, y: QMatrix) -> QMatrix:
    """x_i = sum_j |A|_ji^-1 y_j.

    Raises:
        UndefinedValueError: some |A|_ji is undefined or not invertible
            (this happens even for invertible A, e.g. the identity).
    """
    n = A.require_square("solve_by_quasideterminants")
    if y.shape != (n, 1):
        raise ShapeError(f"solve_by_quasideterminants needs an {n}x1 column, got {y.shape}.")
    x = []
    for i in range(n):
        total = Quaternion.zero(A.params)
        for j in range(n):
            q = quasideterminant(A, j, i).unwrap()
            if is_zero_scalar(norm(q)):
                raise UndefinedValueError(
                    f"|A|{format_position(j, i)} = {q} is not invertible.", witness=str(q)
                )
            total = total + qinv(q) * y[j, 0]
        x.append(total)
    return QMatrix.column(x, A.params)
