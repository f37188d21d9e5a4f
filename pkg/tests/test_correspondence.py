"""Tests for quasideterminants expressed through double cofactors."""

import pytest

from ncdet.errors import SingularMatrixError
from ncdet.matrix import QMatrix
from ncdet.quasi import quasidet_via_rc, quasideterminant
from ncdet.verify.sampling import random_invertible_matrix


class TestCorrespondence:
    @pytest.mark.parametrize("n", [2, 3])
    def test_forms_agree(self, hamilton, rng, n):
        A = random_invertible_matrix(rng, n, hamilton, entrywise=True)
        for p in range(n):
            for q in range(n):
                result = quasidet_via_rc(A, p, q)
                assert result.agrees
                assert result.column_form.value == quasideterminant(A, p, q).value
                assert result.row_form.value == result.column_form.value

    def test_without_direct_form(self, hamilton, rng):
        A = random_invertible_matrix(rng, 2, hamilton)
        result = quasidet_via_rc(A, 1, 0, compare=False)
        assert result.direct is None
        assert len(result.defined_values()) == 2

    def test_identity_off_diagonal(self, hamilton):
        # every form is undefined, so the forms trivially agree
        result = quasidet_via_rc(QMatrix.identity(2, hamilton), 0, 1)
        assert result.defined_values() == []
        assert "n(L(1,2)) = 0" in result.column_form.failure_witness
        doc = result.to_dict()
        assert doc["p"] == 1 and doc["q"] == 2
        assert doc["ddet"] == "1"
        assert doc["direct"]["defined"] is False

    def test_singular(self, example):
        with pytest.raises(SingularMatrixError):
            quasidet_via_rc(example, 0, 0)
