"""Tests for row/column determinants and their cofactor expansions."""

import time

import pytest

from ncdet.algebra import Quaternion, conj
from ncdet.determinants import (
    basic_property_checks,
    cdet,
    cdet_by_expansion,
    cdet_via_adjoint,
    determinant_by_permutations,
    left_cofactor,
    rdet,
    rdet_by_expansion,
    right_cofactor,
)
from ncdet.determinants.rowcol import column_report, row_report
from ncdet.errors import EnumerationLimitError, ShapeError
from ncdet.matrix import QMatrix
from ncdet.verify.oracles import bareiss_det, cdet_2x2, rdet_2x2, real_parts
from ncdet.verify.sampling import random_matrix, random_real_matrix


class TestWorkedExample:
    def test_all_row_and_column_determinants(self, example, quat):
        for k in range(2):
            assert rdet(example, k) == quat(2)
            assert cdet(example, k) == quat(2)

    def test_identity(self, hamilton, quat):
        I3 = QMatrix.identity(3, hamilton)
        assert rdet(I3, 1) == quat(1)
        assert cdet(I3, 2) == quat(1)

    def test_one_by_one(self, quat):
        A = QMatrix.from_rows([[quat(1, 2, 3, 4)]])
        assert rdet(A, 0) == cdet(A, 0) == quat(1, 2, 3, 4)


class TestClosedForms:
    def test_first_index(self, hamilton, rng):
        for _ in range(10):
            A = random_matrix(rng, 2, 2, hamilton)
            assert rdet(A, 0) == rdet_2x2(A)
            assert cdet(A, 0) == cdet_2x2(A)

    def test_second_index(self, hamilton, rng):
        for _ in range(10):
            A = random_matrix(rng, 2, 2, hamilton)
            a11, a12, a21, a22 = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
            assert rdet(A, 1) == a22 * a11 - a21 * a12
            assert cdet(A, 1) == a11 * a22 - a21 * a12

    def test_noncommutative_entries_distinguish_indices(self, matrix):
        A = matrix([["0,1,0,0", "0,0,1,0"], ["0,0,0,1", "1,0,0,0"]])
        # i*1 - j*k = i - i = 0 against 1*i - k*j = i + i
        assert rdet(A, 0).is_zero
        assert rdet(A, 1) != rdet(A, 0)


class TestCommutativeDegeneration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_bareiss(self, hamilton, rng, n):
        A = random_real_matrix(rng, n, hamilton)
        expected = Quaternion.scalar(bareiss_det(real_parts(A)), hamilton)
        for k in range(n):
            assert rdet(A, k) == expected
            assert cdet(A, k) == expected


class TestEnumerationPaths:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_walk_matches_reference(self, hamilton, rng, n):
        A = random_matrix(rng, n, n, hamilton)
        for k in range(n):
            assert rdet(A, k) == determinant_by_permutations(A, k, "row")
            assert cdet(A, k) == determinant_by_permutations(A, k, "column")

    def test_duality(self, hamilton, rng):
        A = random_matrix(rng, 3, 3, hamilton)
        for j in range(3):
            assert cdet(A, j) == cdet_via_adjoint(A, j)
            assert rdet(A, j) == conj(cdet(A.adjoint(), j))

    def test_report_counts_monomials(self, hamilton, rng):
        A = random_matrix(rng, 4, 4, hamilton)
        report = row_report(A, 2)
        assert report.monomial_count == 24
        assert report.value == rdet(A, 2)
        assert report.to_dict()["index"] == 3
        assert column_report(A, 0).kind == "cdet"


class TestCofactors:
    def test_row_expansion(self, hamilton, rng):
        A = random_matrix(rng, 3, 3, hamilton)
        for i in range(3):
            assert rdet_by_expansion(A, i) == rdet(A, i)

    def test_column_expansion(self, hamilton, rng):
        A = random_matrix(rng, 4, 4, hamilton)
        for j in range(4):
            assert cdet_by_expansion(A, j) == cdet(A, j)

    def test_two_by_two_cofactors(self, hamilton, rng):
        A = random_matrix(rng, 2, 2, hamilton)
        assert right_cofactor(A, 0, 0) == A[1, 1]
        assert right_cofactor(A, 0, 1) == -A[1, 0]
        assert left_cofactor(A, 0, 0) == A[1, 1]
        assert left_cofactor(A, 1, 0) == -A[0, 1]

    def test_one_by_one_has_no_cofactors(self, quat):
        with pytest.raises(ShapeError):
            right_cofactor(QMatrix.from_rows([[quat(1)]]), 0, 0)


class TestProperties:
    def test_basic_properties(self, hamilton, rng):
        report = basic_property_checks(random_matrix(rng, 3, 3, hamilton))
        assert report.passed, report.failures
        assert report.to_dict()["passed"]

    def test_left_scaling_of_row(self, hamilton, rng, quat):
        A = random_matrix(rng, 3, 3, hamilton)
        q = quat(0, 1, 1, 0)
        scaled = A.replace_row(1, A.row_at(1).scale_left(q))
        assert rdet(scaled, 1) == q * rdet(A, 1)


class TestLimits:
    def test_non_square(self, hamilton, rng):
        with pytest.raises(ShapeError):
            rdet(random_matrix(rng, 2, 3, hamilton), 0)

    def test_enumeration_limit(self, hamilton):
        with pytest.raises(EnumerationLimitError):
            rdet(QMatrix.identity(10, hamilton), 0)

    @pytest.mark.slow
    def test_seven_by_seven(self, hamilton, rng):
        A = random_matrix(rng, 7, 7, hamilton)
        start = time.perf_counter()
        report = row_report(A, 3, workers=1)
        assert report.monomial_count == 5040
        assert time.perf_counter() - start < 5

    @pytest.mark.slow
    def test_eight_by_eight(self, hamilton, rng):
        A = random_matrix(rng, 8, 8, hamilton)
        start = time.perf_counter()
        report = column_report(A, 5, workers=1)
        assert report.monomial_count == 40320
        assert time.perf_counter() - start < 60

    @pytest.mark.slow
    def test_workers_do_not_change_the_value(self, hamilton, rng):
        A = random_matrix(rng, 7, 7, hamilton)
        assert rdet(A, 3, workers=4).coords == rdet(A, 3, workers=1).coords
        assert cdet(A, 6, workers=4).coords == cdet(A, 6, workers=1).coords
