"""Quasideterminants through double cofactors.

For invertible A,

    |A|_pq = ddet A * conj(L_pq) / n(L_pq) = ddet A * conj(R_pq) / n(R_pq)

with L_pq = cdet_q (A*A)_{.q}(a*_{.p}) and R_pq = rdet_p (AA*)_{p.}(a*_{q.}).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ncdet.algebra.quaternion import Quaternion, conj, norm
from ncdet.algebra.scalars import Scalar, format_scalar, is_zero_scalar
from ncdet.determinants.double import ddet, left_double_cofactor, right_double_cofactor
from ncdet.errors import InternalDisagreementError, SingularMatrixError
from ncdet.matrix.indexing import check_index, format_position, to_external
from ncdet.matrix.qmatrix import QMatrix
from ncdet.quasi.quasideterminant import QuasiResult, quasideterminant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrespondenceResult:
    """Column form, row form and (optionally) the direct expression of |A|_pq."""

    p: int
    q: int
    ddet: Scalar
    column_form: QuasiResult
    row_form: QuasiResult
    direct: QuasiResult | None = None

    def defined_values(self) -> list[tuple[str, Quaternion]]:
        forms = [("column", self.column_form), ("row", self.row_form)]
        if self.direct is not None:
            forms.append(("direct", self.direct))
        return [(name, r.value) for name, r in forms if r.value is not None]

    @property
    def agrees(self) -> bool:
        """True when every defined form has the same value."""
        values = [v for _, v in self.defined_values()]
        return all(v == values[0] for v in values[1:])

    def to_dict(self) -> dict:
        return {
            "p": to_external(self.p),
            "q": to_external(self.q),
            "ddet": format_scalar(self.ddet),
            "column_form": self.column_form.to_dict(),
            "row_form": self.row_form.to_dict(),
            "direct": self.direct.to_dict() if self.direct is not None else None,
        }


def _from_cofactor(d: Scalar, cofactor: Quaternion, name: str, p: int, q: int) -> QuasiResult:
    n = norm(cofactor)
    if is_zero_scalar(n):
        label = f"{name}{format_position(p, q)}"
        return QuasiResult.undefined(f"n({label}) = 0 with {label} = {cofactor}", p, q)
    return QuasiResult(conj(cofactor).scale(d / n), None, p, q)


def quasidet_via_rc(A: QMatrix, p: int, q: int, *, compare: bool = True) -> CorrespondenceResult:
    """Both double-cofactor representations of |A|_pq (0-based p, q).

    With ``compare`` the direct expression is evaluated as well and all
    defined values must coincide.

    Raises:
        SingularMatrixError: ddet A = 0.
        InternalDisagreementError: two defined forms differ.
    """
    n = A.require_square("quasidet_via_rc")
    check_index(p, n, name="row")
    check_index(q, n, name="column")
    d = ddet(A)
    if is_zero_scalar(d):
        raise SingularMatrixError("ddet A = 0; the correspondence needs an invertible matrix.")
    result = CorrespondenceResult(
        p,
        q,
        d,
        _from_cofactor(d, left_double_cofactor(A, p, q), "L", p, q),
        _from_cofactor(d, right_double_cofactor(A, p, q), "R", p, q),
        quasideterminant(A, p, q) if compare else None,
    )
    if not result.agrees:
        detail = ", ".join(f"{name} = {v}" for name, v in result.defined_values())
        raise InternalDisagreementError(
            f"Representations of |A|{format_position(p, q)} disagree: {detail}", witness=str(A)
        )
    logger.debug("Correspondence at %s: %s", format_position(p, q), result.defined_values())
    return result
