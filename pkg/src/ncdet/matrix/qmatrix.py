"""Dense matrices over H(a,b).

Entries live in a read-only numpy object array; every structural operation
(replacement, deletion, selection) returns a fresh matrix. Indices are
0-based here; 1-based conversion happens in ``ncdet.matrix.indexing``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from ncdet.algebra.quaternion import AlgebraParams, Quaternion, conj
from ncdet.algebra.scalars import Scalar
from ncdet.errors import AlgebraMismatchError, ShapeError
from ncdet.matrix.indexing import check_index, check_indices, complement, format_position


_conj_elementwise = np.frompyfunc(conj, 1, 1)


class QMatrix:
    """An m x n matrix of quaternions sharing one AlgebraParams.

    Column vectors are m x 1 matrices and rows are 1 x n matrices; there is
    no separate vector type.
    """

    __slots__ = ("_data", "params")

    def __init__(self, data: np.ndarray, params: AlgebraParams):
        if data.ndim != 2 or data.shape[0] == 0 or data.shape[1] == 0:
            raise ShapeError(f"Matrix must be 2-D and nonempty, got shape {data.shape}.")
        for (i, j), q in np.ndenumerate(data):
            if not isinstance(q, Quaternion):
                raise AlgebraMismatchError(
                    f"Entry {format_position(i, j)} is {type(q).__name__}, not a Quaternion."
                )
            if q.params != params:
                raise AlgebraMismatchError(
                    f"Entry {format_position(i, j)} belongs to {q.params}, matrix to {params}."
                )
        arr = np.array(data, dtype=object, copy=True)
        arr.flags.writeable = False
        self._data = arr
        self.params = params

    @classmethod
    def _wrap(cls, data: np.ndarray, params: AlgebraParams) -> QMatrix:
        """Adopt an array of already-validated entries."""
        obj = cls.__new__(cls)
        data.flags.writeable = False
        obj._data = data
        obj.params = params
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Quaternion]], params: AlgebraParams | None = None
    ) -> QMatrix:
        """Build from a list of rows; params default to those of the first entry."""
        if not rows or not rows[0]:
            raise ShapeError("Matrix must have at least one row and one column.")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError(f"Ragged rows: lengths {[len(r) for r in rows]}.")
        data = np.empty((len(rows), width), dtype=object)
        for i, r in enumerate(rows):
            for j, q in enumerate(r):
                data[i, j] = q
        return cls(data, params if params is not None else rows[0][0].params)

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]], params: AlgebraParams) -> QMatrix:
        """Build from rows of "x0,x1,x2,x3" strings."""
        return cls.from_rows([[Quaternion.parse(t, params) for t in r] for r in rows], params)

    @classmethod
    def identity(cls, n: int, params: AlgebraParams) -> QMatrix:
        one, zero = Quaternion.one(params), Quaternion.zero(params)
        rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls.from_rows(rows, params)

    @classmethod
    def zeros(cls, m: int, n: int, params: AlgebraParams) -> QMatrix:
        zero = Quaternion.zero(params)
        return cls.from_rows([[zero] * n for _ in range(m)], params)

    @classmethod
    def column(cls, entries: Sequence[Quaternion], params: AlgebraParams | None = None) -> QMatrix:
        return cls.from_rows([[q] for q in entries], params)

    @classmethod
    def row(cls, entries: Sequence[Quaternion], params: AlgebraParams | None = None) -> QMatrix:
        return cls.from_rows([list(entries)], params)

    # -- shape and access --------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Quaternion:
        i, j = key
        i = check_index(i, self.rows, name="row")
        j = check_index(j, self.cols, name="column")
        return self._data[i, j]

    def entries(self) -> list[Quaternion]:
        """Row-major entry list."""
        return list(self._data.flat)

    def to_rows(self) -> list[list[Quaternion]]:
        return [list(r) for r in self._data]

    def to_text_rows(self) -> list[list[str]]:
        return [[str(q) for q in r] for r in self._data]

    def row_at(self, i: int) -> QMatrix:
        """Row i as a 1 x n matrix."""
        i = check_index(i, self.rows, name="row")
        return QMatrix._wrap(self._data[i : i + 1, :].copy(), self.params)

    def col_at(self, j: int) -> QMatrix:
        """Column j as an m x 1 matrix."""
        j = check_index(j, self.cols, name="column")
        return QMatrix._wrap(self._data[:, j : j + 1].copy(), self.params)

    def require_square(self, what: str = "operation") -> int:
        if not self.is_square:
            raise ShapeError(f"{what} needs a square matrix, got {self.rows}x{self.cols}.")
        return self.rows

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: QMatrix) -> None:
        if self.params != other.params:
            raise AlgebraMismatchError(f"Matrices over {self.params} and {other.params}.")

    def __matmul__(self, other: QMatrix) -> QMatrix:
        return matmul(self, other)

    def __add__(self, other: QMatrix) -> QMatrix:
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ShapeError(f"Cannot add {self.shape} and {other.shape}.")
        return QMatrix._wrap(self._data + other._data, self.params)

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ShapeError(f"Cannot subtract {other.shape} from {self.shape}.")
        return QMatrix._wrap(self._data - other._data, self.params)

    def __neg__(self) -> QMatrix:
        return QMatrix._wrap(-self._data, self.params)

    def scale_left(self, q: Quaternion) -> QMatrix:
        """q * A, entrywise q * a_ij."""
        return QMatrix._wrap(
            np.array([[q * x for x in r] for r in self._data], dtype=object), self.params
        )

    def scale_right(self, q: Quaternion) -> QMatrix:
        """A * q, entrywise a_ij * q."""
        return QMatrix._wrap(
            np.array([[x * q for x in r] for r in self._data], dtype=object), self.params
        )

    def scale(self, s: Scalar | int) -> QMatrix:
        """Multiply by a central base-field scalar."""
        return QMatrix._wrap(
            np.array([[x.scale(s) for x in r] for r in self._data], dtype=object), self.params
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.params != other.params or self.shape != other.shape:
            return False
        return all(x == y for x, y in zip(self._data.flat, other._data.flat))

    __hash__ = None  # type: ignore[assignment]

    # -- adjoint -----------------------------------------------------------

    def adjoint(self) -> QMatrix:
        """Hermitian adjoint A*: (A*)_ij = conj(a_ji)."""
        return QMatrix._wrap(_conj_elementwise(self._data.T).astype(object), self.params)

    def is_hermitian(self) -> bool:
        self.require_square("is_hermitian")
        n = self.rows
        return all(
            self._data[i, j] == conj(self._data[j, i]) for i in range(n) for j in range(i, n)
        )

    def is_commutative(self) -> bool:
        """True when every entry lies in the base field."""
        return all(q.is_real for q in self._data.flat)

    def is_zero(self) -> bool:
        return all(q.is_zero for q in self._data.flat)

    # -- replacement and deletion -----------------------------------------

    def replace_col(self, j: int, b: QMatrix) -> QMatrix:
        """A_{.j}(b): column j replaced by the m x 1 matrix b."""
        j = check_index(j, self.cols, name="column")
        self._check_compatible(b)
        if b.shape != (self.rows, 1):
            raise ShapeError(f"Replacement column must be {self.rows}x1, got {b.shape}.")
        data = self._data.copy()
        data[:, j] = b._data[:, 0]
        return QMatrix._wrap(data, self.params)

    def replace_row(self, i: int, b: QMatrix) -> QMatrix:
        """A_{i.}(b): row i replaced by the 1 x n matrix b."""
        i = check_index(i, self.rows, name="row")
        self._check_compatible(b)
        if b.shape != (1, self.cols):
            raise ShapeError(f"Replacement row must be 1x{self.cols}, got {b.shape}.")
        data = self._data.copy()
        data[i, :] = b._data[0, :]
        return QMatrix._wrap(data, self.params)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> QMatrix:
        """Rows and columns kept in the order given."""
        r = check_indices(rows, self.rows, name="row")
        c = check_indices(cols, self.cols, name="column")
        if not r or not c:
            raise ShapeError("Selection leaves an empty matrix.")
        return QMatrix._wrap(self._data[np.ix_(r, c)].copy(), self.params)

    def select_rows(self, rows: Iterable[int]) -> QMatrix:
        return self.submatrix(rows, range(self.cols))

    def select_cols(self, cols: Iterable[int]) -> QMatrix:
        return self.submatrix(range(self.rows), cols)

    def delete_rows(self, rows: Iterable[int]) -> QMatrix:
        return self.select_rows(complement(check_indices(rows, self.rows, name="row"), self.rows))

    def delete_cols(self, cols: Iterable[int]) -> QMatrix:
        keep = complement(check_indices(cols, self.cols, name="column"), self.cols)
        return self.select_cols(keep)

    def delete_rowcol(self, i: int, j: int) -> QMatrix:
        """The minor A^{ij}: row i and column j removed."""
        check_index(i, self.rows, name="row")
        check_index(j, self.cols, name="column")
        if self.rows == 1 or self.cols == 1:
            raise ShapeError(f"Deleting a row and column of a {self.rows}x{self.cols} matrix.")
        return self.submatrix(complement([i], self.rows), complement([j], self.cols))

    def col_replace_then_delete(self, i: int, j: int) -> QMatrix:
        """A(i -> j): column j replaced by column i, then row i and column i deleted.

        For i == j this is the principal minor A^{ii}.
        """
        n = self.require_square("col_replace_then_delete")
        check_index(i, n, name="row")
        check_index(j, n, name="column")
        if n == 1:
            raise ShapeError("col_replace_then_delete of a 1x1 matrix is empty.")
        replaced = self if i == j else self.replace_col(j, self.col_at(i))
        return replaced.delete_rowcol(i, i)

    def row_replace_then_delete(self, source: int, target: int) -> QMatrix:
        """Row ``target`` replaced by row ``source``, then row and column ``source`` deleted."""
        n = self.require_square("row_replace_then_delete")
        check_index(source, n, name="row")
        check_index(target, n, name="row")
        if n == 1:
            raise ShapeError("row_replace_then_delete of a 1x1 matrix is empty.")
        replaced = self if source == target else self.replace_row(target, self.row_at(source))
        return replaced.delete_rowcol(source, source)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        return "\n".join("[" + "; ".join(r) + "]" for r in self.to_text_rows())

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols} over {self.params})"


def matmul(A: QMatrix, B: QMatrix) -> QMatrix:
    """Row-by-column product; each term is a_ik * b_kj with the left factor first."""
    A._check_compatible(B)
    if A.cols != B.rows:
        raise ShapeError(f"Cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}.")
    return QMatrix._wrap(np.asarray(A._data @ B._data, dtype=object), A.params)


def hermitian_adjoint(A: QMatrix) -> QMatrix:
    return A.adjoint()


def is_hermitian(A: QMatrix) -> bool:
    return A.is_hermitian()


def replace_col(A: QMatrix, j: int, b: QMatrix) -> QMatrix:
    return A.replace_col(j, b)


def replace_row(A: QMatrix, i: int, b: QMatrix) -> QMatrix:
    return A.replace_row(i, b)


def delete_rowcol(A: QMatrix, i: int, j: int) -> QMatrix:
    return A.delete_rowcol(i, j)


def col_replace_then_delete(A: QMatrix, i: int, j: int) -> QMatrix:
    return A.col_replace_then_delete(i, j)


def row_replace_then_delete(A: QMatrix, source: int, target: int) -> QMatrix:
    return A.row_replace_then_delete(source, target)
