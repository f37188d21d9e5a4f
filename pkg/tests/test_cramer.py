"""Tests for Cramer's rule on right and left systems."""

import pytest

from ncdet.determinants import (
    inverse,
    solve_left,
    solve_left_hermitian,
    solve_right,
    solve_right_hermitian,
)
from ncdet.errors import NotHermitianError, ShapeError, SingularMatrixError
from ncdet.matrix import QMatrix
from ncdet.verify.sampling import random_hermitian, random_invertible_matrix, random_matrix


class TestRightSystems:
    def test_solves(self, hamilton, rng):
        A = random_invertible_matrix(rng, 3, hamilton)
        y = random_matrix(rng, 3, 1, hamilton)
        x = solve_right(A, y)
        assert x.shape == (3, 1)
        assert A @ x == y

    def test_matches_inverse(self, hamilton, rng):
        A = random_invertible_matrix(rng, 3, hamilton)
        y = random_matrix(rng, 3, 1, hamilton)
        assert solve_right(A, y) == inverse(A) @ y

    def test_hand_worked(self, matrix):
        # i x1 = 1, j x2 = k  =>  x1 = -i, x2 = -i
        A = matrix([["0,1,0,0", "0,0,0,0"], ["0,0,0,0", "0,0,1,0"]])
        y = matrix([["1,0,0,0"], ["0,0,0,1"]])
        assert solve_right(A, y) == matrix([["0,-1,0,0"], ["0,-1,0,0"]])

    def test_row_rhs_rejected(self, hamilton, rng):
        A = random_invertible_matrix(rng, 2, hamilton)
        with pytest.raises(ShapeError):
            solve_right(A, random_matrix(rng, 1, 2, hamilton))

    def test_singular(self, example, matrix):
        with pytest.raises(SingularMatrixError):
            solve_right(example, matrix([["1,0,0,0"], ["0,0,0,0"]]))


class TestLeftSystems:
    def test_solves(self, hamilton, rng):
        A = random_invertible_matrix(rng, 3, hamilton)
        y = random_matrix(rng, 1, 3, hamilton)
        x = solve_left(A, y)
        assert x.shape == (1, 3)
        assert x @ A == y

    def test_adjoint_of_right_system(self, hamilton, rng):
        A = random_invertible_matrix(rng, 2, hamilton)
        y = random_matrix(rng, 2, 1, hamilton)
        right = solve_right(A, y)
        left = solve_left(A.adjoint(), y.adjoint())
        # x A* = y* is the adjoint of A x = y
        assert left == right.adjoint()


class TestHermitianSystems:
    def test_right(self, hamilton, rng):
        H = random_hermitian(rng, 3, hamilton)
        y = random_matrix(rng, 3, 1, hamilton)
        x = solve_right_hermitian(H, y)
        assert H @ x == y
        assert x == solve_right(H, y)

    def test_left(self, hamilton, rng):
        H = random_hermitian(rng, 3, hamilton)
        y = random_matrix(rng, 1, 3, hamilton)
        assert solve_left_hermitian(H, y) @ H == y

    def test_not_hermitian(self, example, matrix):
        with pytest.raises(NotHermitianError):
            solve_right_hermitian(example, matrix([["1,0,0,0"], ["0,0,0,0"]]))

    def test_singular(self, example, hamilton):
        H = example.adjoint() @ example
        with pytest.raises(SingularMatrixError):
            solve_left_hermitian(H, QMatrix.row(H.row_at(0).entries(), hamilton))
