"""DetReport producers for every determinant kind."""

from __future__ import annotations

import math
from typing import Literal

from ncdet.algebra.quaternion import Quaternion
from ncdet.determinants.double import ddet
from ncdet.determinants.hermitian import hermitian_det, mdet
from ncdet.determinants.rowcol import DetReport, column_report, row_report
from ncdet.matrix.qmatrix import QMatrix

Kind = Literal["rdet", "cdet", "mdet", "hdet", "ddet"]


def determinant_report(
    A: QMatrix,
    kind: Kind,
    index: int = 0,
    *,
    workers: int | None = None,
    allow_large: bool = False,
) -> DetReport:
    """Compute one determinant of A and describe it.

    ``index`` (0-based) applies to rdet and cdet only. For mdet, hdet and
    ddet the monomial count is that of one n x n determinant expansion.
    """
    if kind == "rdet":
        return row_report(A, index, workers=workers, allow_large=allow_large)
    if kind == "cdet":
        return column_report(A, index, workers=workers, allow_large=allow_large)
    n = A.require_square(kind)
    count = math.factorial(n)
    if kind == "mdet":
        return DetReport(mdet(A), None, kind, count, n)
    if kind == "hdet":
        return DetReport(Quaternion.scalar(hermitian_det(A), A.params), None, kind, count, n)
    if kind == "ddet":
        return DetReport(Quaternion.scalar(ddet(A), A.params), None, kind, count, n)
    raise ValueError(f"Unknown determinant kind {kind!r}.")
