"""Quasideterminants, the Hadamard inverse and inversion of a block minor.

For a square A the (ij)-quasideterminant is

    |A|_ij = a_ij - r_i^j (A^{ij})^-1 c_j^i

where r_i^j is row i without entry j, c_j^i is column j without entry i and
A^{ij} the deletion minor. It exists iff A^{ij} is invertible; when A is
invertible it also equals ((A^-1)_ji)^-1 whenever that entry is invertible.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ncdet.algebra.quaternion import Quaternion, norm, qinv
from ncdet.algebra.scalars import is_zero_scalar
from ncdet.determinants.double import inverse
from ncdet.errors import ShapeError, SingularMatrixError, UndefinedValueError
from ncdet.matrix.indexing import check_index, check_indices, complement, format_position
from ncdet.matrix.qmatrix import QMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuasiResult:
    """A quasideterminant value, or the reason it does not exist.

    Exactly one of ``value`` and ``failure_witness`` is set.
    """

    value: Quaternion | None
    failure_witness: str | None = None
    i: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if (self.value is None) == (self.failure_witness is None):
            raise ValueError("QuasiResult needs exactly one of value and failure_witness.")

    @property
    def defined(self) -> bool:
        return self.value is not None

    @classmethod
    def undefined(cls, witness: str, i: int | None = None, j: int | None = None) -> QuasiResult:
        return cls(None, witness, i, j)

    def unwrap(self) -> Quaternion:
        """The value, or UndefinedValueError carrying the witness."""
        if self.value is None:
            where = f" {format_position(self.i, self.j)}" if self.i is not None else ""
            raise UndefinedValueError(
                f"Quasideterminant{where} is undefined.", witness=self.failure_witness
            )
        return self.value

    def to_dict(self) -> dict:
        return {
            "defined": self.defined,
            "value": str(self.value) if self.value is not None else None,
            "witness": self.failure_witness,
        }


def hadamard_inverse(A: QMatrix) -> QMatrix:
    """Entrywise inverse.

    Raises:
        UndefinedValueError: some entry has zero norm.
    """
    rows = []
    for i, r in enumerate(A.to_rows()):
        out = []
        for j, q in enumerate(r):
            if is_zero_scalar(norm(q)):
                raise UndefinedValueError(
                    f"Hadamard inverse undefined: entry {format_position(i, j)} = {q} "
                    "is not invertible.",
                    witness=f"a{format_position(i, j)} = {q}",
                )
            out.append(qinv(q))
        rows.append(out)
    return QMatrix.from_rows(rows, A.params)


def quasideterminant(A: QMatrix, i: int, j: int) -> QuasiResult:
    """|A|_ij by the deletion-minor expression (0-based i, j)."""
    n = A.require_square("quasideterminant")
    check_index(i, n, name="row")
    check_index(j, n, name="column")
    if n == 1:
        return QuasiResult(A[0, 0], None, i, j)
    minor = A.delete_rowcol(i, j)
    try:
        minor_inv = inverse(minor)
    except SingularMatrixError:
        witness = f"minor A^{format_position(i, j)} is singular (ddet = 0)"
        logger.debug("Quasideterminant %s undefined: %s", format_position(i, j), witness)
        return QuasiResult.undefined(witness, i, j)
    r = A.row_at(i).delete_cols([j])
    c = A.col_at(j).delete_rows([i])
    correction = (r @ minor_inv @ c)[0, 0]
    return QuasiResult(A[i, j] - correction, None, i, j)


def quasideterminant_via_inverse(A: QMatrix, i: int, j: int) -> QuasiResult:
    """|A|_ij as ((A^-1)_ji)^-1, defined when A and that entry are invertible."""
    n = A.require_square("quasideterminant_via_inverse")
    check_index(i, n, name="row")
    check_index(j, n, name="column")
    try:
        b = inverse(A)[j, i]
    except SingularMatrixError:
        return QuasiResult.undefined("A is singular (ddet = 0)", i, j)
    if is_zero_scalar(norm(b)):
        return QuasiResult.undefined(
            f"entry {format_position(j, i)} of the inverse is {b}, not invertible", i, j
        )
    return QuasiResult(qinv(b), None, i, j)


def quasideterminant_table(A: QMatrix) -> list[list[QuasiResult]]:
    """All n^2 quasideterminants, indexed [i][j]."""
    n = A.require_square("quasideterminant_table")
    return [[quasideterminant(A, i, j) for j in range(n)] for i in range(n)]


def block_inverse_minor(
    A: QMatrix, rows: Sequence[int], cols: Sequence[int] | None = None
) -> QMatrix:
    """The block of A^-1 with rows ``cols`` and columns ``rows``.

    With I = rows, J = cols and primes for complements,

        (A^-1)_{J,I} = (A_{I,J} - A_{I,J'} (A_{I',J'})^-1 A_{I',J})^-1

    Raises:
        UndefinedValueError: A_{I',J'} or the bracketed Schur complement is
            not invertible.
    """
    n = A.require_square("block_inverse_minor")
    row_set = check_indices(rows, n, name="row")
    col_set = check_indices(cols if cols is not None else rows, n, name="column")
    if len(row_set) != len(col_set) or not row_set:
        raise ShapeError(
            f"Block needs equally many rows and columns, got {len(row_set)} and {len(col_set)}."
        )
    rest_rows, rest_cols = complement(row_set, n), complement(col_set, n)
    schur = A.submatrix(row_set, col_set)
    if rest_rows:
        try:
            comp_inv = inverse(A.submatrix(rest_rows, rest_cols))
        except SingularMatrixError as exc:
            raise UndefinedValueError(
                "Complementary block is not invertible.", witness=exc.witness
            ) from exc
        cross = A.submatrix(row_set, rest_cols) @ comp_inv @ A.submatrix(rest_rows, col_set)
        schur = schur - cross
    try:
        return inverse(schur)
    except SingularMatrixError as exc:
        raise UndefinedValueError(
            "Schur complement of the block is not invertible.", witness=str(schur)
        ) from exc
