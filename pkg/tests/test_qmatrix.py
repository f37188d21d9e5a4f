"""Tests for QMatrix structure and arithmetic."""

import pytest

from ncdet.algebra import AlgebraParams, Quaternion
from ncdet.errors import AlgebraMismatchError, IndexOutOfRangeError, ShapeError
from ncdet.matrix import QMatrix, col_replace_then_delete, row_replace_then_delete
from ncdet.matrix.indexing import format_position, to_external, to_internal
from ncdet.verify.sampling import random_matrix


@pytest.fixture
def m3(matrix):
    return matrix(
        [
            ["1,0,0,0", "0,1,0,0", "0,0,1,0"],
            ["0,0,0,1", "2,0,0,0", "0,3,0,0"],
            ["0,0,4,0", "0,0,0,5", "6,0,0,0"],
        ]
    )


class TestConstruction:
    def test_shape(self, m3):
        assert m3.shape == (3, 3)
        assert m3.is_square

    def test_ragged_rows(self, quat):
        with pytest.raises(ShapeError):
            QMatrix.from_rows([[quat(1), quat(2)], [quat(3)]])

    def test_empty(self, hamilton):
        with pytest.raises(ShapeError):
            QMatrix.from_rows([], hamilton)

    def test_mixed_algebras(self, quat):
        foreign = Quaternion.of(1, 0, 0, 0, AlgebraParams(2, -3))
        with pytest.raises(AlgebraMismatchError):
            QMatrix.from_rows([[quat(1), foreign]])

    def test_identity(self, hamilton, quat):
        I3 = QMatrix.identity(3, hamilton)
        assert I3[1, 1] == quat(1)
        assert I3[0, 2].is_zero

    def test_read_only(self, m3):
        with pytest.raises(ValueError):
            m3._data[0, 0] = None

    def test_index_out_of_range(self, m3):
        with pytest.raises(IndexOutOfRangeError, match="row 4 out of range 1..3"):
            m3[3, 0]


class TestArithmetic:
    def test_matmul_associative(self, hamilton, rng):
        A = random_matrix(rng, 2, 3, hamilton)
        B = random_matrix(rng, 3, 4, hamilton)
        C = random_matrix(rng, 4, 2, hamilton)
        assert (A @ B) @ C == A @ (B @ C)

    def test_matmul_keeps_factor_order(self, quat):
        i, j = quat(0, 1), quat(0, 0, 1)
        A = QMatrix.row([i])
        B = QMatrix.column([j])
        assert (A @ B)[0, 0] == i * j
        assert (B @ A)[0, 0] == j * i

    def test_matmul_shape_error(self, hamilton, rng):
        with pytest.raises(ShapeError):
            random_matrix(rng, 2, 3, hamilton) @ random_matrix(rng, 2, 3, hamilton)

    def test_identity_is_neutral(self, m3, hamilton):
        I3 = QMatrix.identity(3, hamilton)
        assert I3 @ m3 == m3 == m3 @ I3

    def test_add_sub_neg(self, m3, hamilton):
        assert (m3 + m3) - m3 == m3
        assert (m3 + (-m3)).is_zero()
        assert m3.scale(2) == m3 + m3

    def test_one_sided_scaling(self, m3, quat):
        i = quat(0, 1)
        assert m3.scale_left(i)[1, 0] == i * m3[1, 0]
        assert m3.scale_right(i)[1, 0] == m3[1, 0] * i
        assert m3.scale_left(i) != m3.scale_right(i)


class TestAdjoint:
    def test_involution(self, hamilton, rng):
        A = random_matrix(rng, 2, 3, hamilton)
        assert A.adjoint().shape == (3, 2)
        assert A.adjoint().adjoint() == A

    def test_product_rule(self, hamilton, rng):
        A = random_matrix(rng, 2, 3, hamilton)
        B = random_matrix(rng, 3, 2, hamilton)
        assert (A @ B).adjoint() == B.adjoint() @ A.adjoint()

    def test_gram_matrices_hermitian(self, hamilton, rng):
        A = random_matrix(rng, 3, 4, hamilton)
        assert (A @ A.adjoint()).is_hermitian()
        assert (A.adjoint() @ A).is_hermitian()
        assert not A.adjoint().is_square

    def test_worked_example_gram(self, example, matrix):
        gram = matrix([["2,0,0,0", "0,0,0,-2"], ["0,0,0,2", "2,0,0,0"]])
        assert example.adjoint() @ example == gram

    def test_commutative(self, matrix, m3):
        assert matrix([["1,0,0,0", "2,0,0,0"]]).is_commutative()
        assert not m3.is_commutative()


class TestReplaceDelete:
    def test_replace_col(self, m3, quat):
        b = QMatrix.column([quat(7), quat(8), quat(9)])
        R = m3.replace_col(1, b)
        assert R.col_at(1) == b
        assert R.col_at(0) == m3.col_at(0)
        assert m3[0, 1] == quat(0, 1)

    def test_replace_wrong_shape(self, m3, quat):
        with pytest.raises(ShapeError):
            m3.replace_row(0, QMatrix.row([quat(1)]))

    def test_delete_rowcol(self, m3, quat):
        minor = m3.delete_rowcol(0, 1)
        assert minor.shape == (2, 2)
        assert minor[0, 0] == quat(0, 0, 0, 1)
        assert minor[1, 1] == quat(6)

    def test_delete_commutes_with_disjoint_replace(self, m3, quat):
        b = QMatrix.row([quat(7), quat(8), quat(9)])
        assert m3.replace_row(0, b).delete_rows([2]) == m3.delete_rows([2]).replace_row(0, b)
        assert m3.replace_row(2, b).delete_rows([0]) == m3.delete_rows([0]).replace_row(1, b)

    def test_col_replace_then_delete(self, m3):
        # column 3 <- column 1, then row 1 and column 1 removed
        M = col_replace_then_delete(m3, 0, 2)
        assert M == m3.replace_col(2, m3.col_at(0)).delete_rowcol(0, 0)
        assert M.col_at(1) == m3.col_at(0).delete_rows([0])

    def test_col_replace_then_delete_diagonal(self, m3):
        assert m3.col_replace_then_delete(1, 1) == m3.delete_rowcol(1, 1)

    def test_row_replace_then_delete(self, m3):
        M = row_replace_then_delete(m3, 2, 0)
        assert M == m3.replace_row(0, m3.row_at(2)).delete_rowcol(2, 2)

    def test_submatrix_keeps_order(self, m3):
        S = m3.submatrix([2, 0], [1])
        assert S.shape == (2, 1)
        assert S[0, 0] == m3[2, 1]
        assert S[1, 0] == m3[0, 1]

    def test_duplicate_indices(self, m3):
        with pytest.raises(IndexOutOfRangeError):
            m3.submatrix([0, 0], [1])


class TestIndexing:
    def test_round_trip(self):
        assert to_internal(1, 3) == 0
        assert to_external(2) == 3

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            to_internal(0, 3)
        with pytest.raises(IndexOutOfRangeError):
            to_internal(4, 3)

    def test_format_position(self):
        assert format_position(0, 2) == "(1,3)"


class TestText:
    def test_str(self, example):
        assert str(example) == "[0,1,0,0; 0,0,1,0]\n[0,0,1,0; 0,-1,0,0]"

    def test_text_rows(self, example):
        assert example.to_text_rows()[1][1] == "0,-1,0,0"
