"""Tests for rank by elimination and by principal minors."""

import pytest

from ncdet.determinants import principal_minor_rank, rank
from ncdet.errors import EliminationStallError, EnumerationLimitError, NotHermitianError
from ncdet.matrix import QMatrix
from ncdet.verify.sampling import low_rank_matrix, random_matrix


class TestRank:
    def test_worked_example(self, example):
        assert rank(example) == 1

    def test_identity_and_zero(self, hamilton):
        assert rank(QMatrix.identity(4, hamilton)) == 4
        assert rank(QMatrix.zeros(3, 2, hamilton)) == 0

    def test_full_rank_rectangular(self, hamilton, rng):
        assert rank(random_matrix(rng, 3, 4, hamilton)) == 3
        assert rank(random_matrix(rng, 4, 2, hamilton)) == 2

    @pytest.mark.parametrize("r", [1, 2])
    def test_product_bounds_rank(self, hamilton, rng, r):
        assert rank(low_rank_matrix(rng, 4, r, hamilton)) == r

    def test_adjoint_preserves_rank(self, hamilton, rng):
        A = low_rank_matrix(rng, 3, 2, hamilton)
        assert rank(A.adjoint()) == rank(A) == 2

    def test_stall_in_split_algebra(self, split):
        A = QMatrix.from_text([["1,1,0,0", "0,0,0,0"], ["0,0,0,0", "1,0,1,0"]], split)
        with pytest.raises(EliminationStallError) as info:
            rank(A)
        assert info.value.certificate.shape == (2, 2)
        assert info.value.witness


class TestPrincipalMinorRank:
    def test_worked_example(self, example):
        assert principal_minor_rank(example.adjoint() @ example) == 1

    def test_matches_rank(self, hamilton, rng):
        A = low_rank_matrix(rng, 4, 2, hamilton)
        assert principal_minor_rank(A.adjoint() @ A) == rank(A)

    def test_zero(self, hamilton):
        assert principal_minor_rank(QMatrix.zeros(2, 2, hamilton)) == 0

    def test_not_hermitian(self, example):
        with pytest.raises(NotHermitianError):
            principal_minor_rank(example)

    def test_limit(self, hamilton):
        with pytest.raises(EnumerationLimitError):
            principal_minor_rank(QMatrix.identity(7, hamilton))
