"""Tests for the double determinant and the inverse matrix."""

import pytest

from ncdet.algebra import AlgebraParams, norm
from ncdet.determinants import ddet, double_adjoint, double_cofactors, inverse
from ncdet.determinants.double import left_double_cofactor, right_double_cofactor
from ncdet.errors import ShapeError, SingularMatrixError
from ncdet.matrix import QMatrix
from ncdet.verify.oracles import ddet_2x2
from ncdet.verify.sampling import random_invertible_matrix, random_matrix


class TestDdet:
    def test_worked_example(self, example):
        assert ddet(example, cross_check=True) == 0

    def test_diagonal(self, matrix):
        A = matrix([["0,1,1,0", "0,0,0,0"], ["0,0,0,0", "1,0,0,1"]])
        assert ddet(A) == 2 * 2

    def test_one_by_one_is_norm(self, quat):
        q = quat(1, 2, -1, 3)
        assert ddet(QMatrix.from_rows([[q]])) == norm(q)

    def test_closed_form(self, hamilton, rng):
        for _ in range(10):
            A = random_matrix(rng, 2, 2, hamilton)
            assert ddet(A) == ddet_2x2(A)

    def test_closed_form_in_another_algebra(self, rng):
        params = AlgebraParams(2, -3)
        for _ in range(10):
            A = random_matrix(rng, 2, 2, params)
            assert ddet(A, cross_check=True) == ddet_2x2(A)

    def test_multiplicative(self, hamilton, rng):
        A = random_matrix(rng, 3, 3, hamilton)
        B = random_matrix(rng, 3, 3, hamilton)
        assert ddet(A @ B) == ddet(A) * ddet(B)

    def test_non_square(self, hamilton, rng):
        with pytest.raises(ShapeError):
            ddet(random_matrix(rng, 2, 3, hamilton))


class TestDoubleCofactors:
    def test_tables(self, hamilton, rng):
        A = random_matrix(rng, 3, 3, hamilton)
        L, R = double_cofactors(A)
        assert L[1, 2] == left_double_cofactor(A, 1, 2)
        assert R[2, 0] == right_double_cofactor(A, 2, 0)
        assert L == R

    def test_adjoint_is_transposed_table(self, hamilton, rng):
        A = random_matrix(rng, 3, 3, hamilton)
        L, _ = double_cofactors(A)
        assert double_adjoint(A, "left")[0, 2] == L[2, 0]


class TestInverse:
    @pytest.mark.parametrize("form", ["left", "right"])
    def test_two_sided(self, hamilton, rng, form):
        A = random_invertible_matrix(rng, 3, hamilton)
        inv = inverse(A, form=form)
        I3 = QMatrix.identity(3, hamilton)
        assert A @ inv == I3
        assert inv @ A == I3

    def test_cross_check(self, hamilton, rng):
        A = random_invertible_matrix(rng, 3, hamilton)
        assert inverse(A, cross_check=True) == inverse(A)

    def test_involution(self, hamilton, rng):
        A = random_invertible_matrix(rng, 2, hamilton)
        assert inverse(inverse(A)) == A

    def test_singular(self, example):
        with pytest.raises(SingularMatrixError) as info:
            inverse(example)
        assert info.value.witness

    def test_zero_divisor_entry(self, split):
        A = QMatrix.from_text([["1,1,0,0"]], split)
        assert ddet(A) == 0
        with pytest.raises(SingularMatrixError):
            inverse(A)
