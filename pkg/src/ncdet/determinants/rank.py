"""Rank by right column elimination and by principal minors of a Hermitian matrix."""

from __future__ import annotations

import logging
from itertools import combinations

from ncdet import config
from ncdet.algebra.quaternion import Quaternion, norm, qinv
from ncdet.algebra.scalars import is_zero_scalar
from ncdet.determinants.hermitian import hermitian_det, require_hermitian
from ncdet.errors import EliminationStallError, EnumerationLimitError
from ncdet.matrix.indexing import format_position
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)


def rank(A: QMatrix) -> int:
    """Maximal number of right-linearly independent columns.

    Each step picks the first entry (row-major over the remaining block)
    with nonzero norm as pivot a_rp and clears the rest of row r with
    col_k <- col_k - col_p * (a_rp^-1 a_rk).

    Raises:
        EliminationStallError: the remaining block is nonzero but every
            nonzero entry is a zero divisor (only in splittable algebras).
    """
    m, n = A.shape
    work: list[list[Quaternion]] = A.to_rows()
    rows = list(range(m))
    cols = list(range(n))
    r = 0
    while rows and cols:
        pivot = next(
            ((i, j) for i in rows for j in cols if not is_zero_scalar(norm(work[i][j]))), None
        )
        if pivot is None:
            if all(work[i][j].is_zero for i in rows for j in cols):
                break
            remaining = QMatrix.from_rows([[work[i][j] for j in cols] for i in rows], A.params)
            logger.warning("Rank elimination stalled on a %dx%d block", len(rows), len(cols))
            raise EliminationStallError(
                f"No invertible pivot among the remaining {len(rows)}x{len(cols)} block; "
                "every nonzero entry has zero norm.",
                certificate=remaining,
            )
        pr, pc = pivot
        logger.debug("Pivot %s", format_position(pr, pc))
        inv = qinv(work[pr][pc])
        for k in cols:
            if k == pc or work[pr][k].is_zero:
                continue
            c = inv * work[pr][k]
            for i in range(m):
                work[i][k] = work[i][k] - work[i][pc] * c
        rows.remove(pr)
        cols.remove(pc)
        r += 1
    return r


def principal_minor_rank(H: QMatrix) -> int:
    """Largest order of a principal submatrix of H with nonzero determinant.

    Searches all principal index subsets from the largest order down.

    Raises:
        NotHermitianError: H is not Hermitian.
        EnumerationLimitError: n exceeds ``config.MAX_PRINCIPAL_ORDER``.
    """
    n = require_hermitian(H, "principal_minor_rank")
    if n > config.MAX_PRINCIPAL_ORDER:
        raise EnumerationLimitError(
            f"Exhaustive principal-minor search limited to n <= {config.MAX_PRINCIPAL_ORDER}, "
            f"got {n}."
        )
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            if not is_zero_scalar(hermitian_det(H.submatrix(subset, subset), check=False)):
                logger.debug("Nonzero principal minor of order %d at %s", size, subset)
                return size
    return 0
