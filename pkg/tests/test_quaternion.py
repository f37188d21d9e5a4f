"""Tests for H(a,b) arithmetic."""

from fractions import Fraction

import pytest

from ncdet.algebra import AlgebraParams, Quaternion, ScalarKind, conj, norm, qinv, trace
from ncdet.errors import AlgebraMismatchError, NcdetError, NotInvertibleError, ParseError
from ncdet.verify.sampling import random_quaternion


class TestAlgebraParams:
    def test_hamilton(self):
        params = AlgebraParams.hamilton()
        assert params.a == -1 and params.b == -1
        assert params.kind is ScalarKind.RATIONAL
        assert params.positive_definite

    def test_split_is_not_definite(self):
        assert not AlgebraParams(1, 1).positive_definite

    def test_degenerate_rejected(self):
        with pytest.raises(NcdetError):
            AlgebraParams(0, -1)

    def test_dict_round_trip(self):
        params = AlgebraParams(Fraction(-1, 2), 3)
        assert params.to_dict() == {"a": "-1/2", "b": "3"}
        assert AlgebraParams.from_dict(params.to_dict()) == params

    def test_from_dict_missing_key(self):
        with pytest.raises(ParseError):
            AlgebraParams.from_dict({"a": "-1"})

    def test_str(self):
        assert str(AlgebraParams.hamilton()) == "H(-1, -1)"


class TestMultiplicationTable:
    @pytest.mark.parametrize("a,b", [(-1, -1), (2, -3), (1, 1), (Fraction(1, 2), 5)])
    def test_table(self, a, b):
        params = AlgebraParams(a, b)
        one, i, j, k = (Quaternion.basis(name, params) for name in "1ijk")
        assert i * i == one.scale(a)
        assert j * j == one.scale(b)
        assert i * j == k
        assert j * i == -k
        assert k * k == one.scale(-a * b)
        assert i * k == j.scale(a)
        assert k * i == -j.scale(a)
        assert k * j == i.scale(b)
        assert j * k == -i.scale(b)

    def test_derived_entries_follow_from_associativity(self):
        params = AlgebraParams(2, -3)
        i, j = Quaternion.basis("i", params), Quaternion.basis("j", params)
        k = i * j
        assert i * k == (i * i) * j
        assert k * j == i * (j * j)
        assert j * k == (j * i) * j
        assert k * i == (i * j) * i

    def test_unknown_basis_name(self, hamilton):
        with pytest.raises(ValueError):
            Quaternion.basis("l", hamilton)


class TestArithmetic:
    def test_associative(self, hamilton, rng):
        for _ in range(20):
            p, q, r = (random_quaternion(rng, hamilton) for _ in range(3))
            assert (p * q) * r == p * (q * r)

    def test_noncommutative(self, quat):
        assert quat(0, 1) * quat(0, 0, 1) != quat(0, 0, 1) * quat(0, 1)

    def test_scalars_are_central(self, quat):
        q = quat(1, 2, 3, 4)
        assert 2 * q == q * 2 == quat(2, 4, 6, 8)

    def test_add_int(self, quat):
        assert quat(0, 1) + 1 == quat(1, 1)
        assert 1 - quat(0, 1) == quat(1, -1)

    def test_divide_by_scalar(self, quat):
        assert quat(2, 4) / 2 == quat(1, 2)
        with pytest.raises(NotInvertibleError):
            quat(1) / 0

    def test_divide_by_quaternion_unsupported(self, quat):
        with pytest.raises(TypeError):
            quat(1) / quat(0, 1)

    def test_mixed_algebras_rejected(self, hamilton):
        i = Quaternion.basis("i", hamilton)
        other = Quaternion.basis("i", AlgebraParams(2, -3))
        with pytest.raises(AlgebraMismatchError):
            i * other
        with pytest.raises(AlgebraMismatchError):
            i + other

    def test_float_rejected_in_rational_mode(self, hamilton):
        with pytest.raises(AlgebraMismatchError):
            Quaternion.of(0.5, 0, 0, 0, hamilton)


class TestNormTraceConj:
    def test_norm_formula(self):
        params = AlgebraParams(2, -3)
        q = Quaternion.of(1, 1, 1, 1, params)
        # 1 - 2 + 3 - 6
        assert norm(q) == -4

    def test_multiplicative(self, hamilton, rng):
        for _ in range(20):
            p, q = random_quaternion(rng, hamilton), random_quaternion(rng, hamilton)
            assert norm(p * q) == norm(p) * norm(q)

    def test_trace_symmetric(self, hamilton, rng):
        for _ in range(20):
            p, q = random_quaternion(rng, hamilton), random_quaternion(rng, hamilton)
            assert trace(p * q) == trace(q * p)

    def test_conj_anti_automorphism(self, hamilton, rng):
        for _ in range(20):
            p, q = random_quaternion(rng, hamilton), random_quaternion(rng, hamilton)
            assert conj(p * q) == conj(q) * conj(p)
            assert conj(p + q) == conj(p) + conj(q)

    def test_trace_is_twice_real_part(self, quat):
        assert trace(quat(3, 1, 2, 5)) == quat(6)

    def test_q_conj_q_is_norm(self, quat):
        q = quat(1, 2, -1, 3)
        assert q * conj(q) == Quaternion.scalar(norm(q), q.params)
        assert norm(q) == 15

    def test_definite_norm(self, hamilton, rng):
        for _ in range(50):
            q = random_quaternion(rng, hamilton)
            assert (norm(q) > 0) != q.is_zero


class TestInverse:
    def test_inverse(self, quat):
        q = quat(1, 2, -1, 3)
        assert q * qinv(q) == quat(1)
        assert qinv(q) * q == quat(1)
        assert qinv(q) == conj(q).scale(Fraction(1, 15))

    def test_zero_not_invertible(self, quat):
        with pytest.raises(NotInvertibleError):
            qinv(quat())

    def test_zero_divisor_in_split_algebra(self, split):
        # n(1 + i) = 1 - 1 = 0 when i^2 = 1
        q = Quaternion.of(1, 1, 0, 0, split)
        assert norm(q) == 0
        assert not q.is_zero
        with pytest.raises(NotInvertibleError) as info:
            qinv(q)
        assert info.value.witness == "1,1,0,0"


class TestText:
    def test_parse_and_format(self, hamilton):
        q = Quaternion.parse("1/2, -3, 0, 4/6", hamilton)
        assert q.coords == (Fraction(1, 2), -3, 0, Fraction(2, 3))
        assert str(q) == "1/2,-3,0,2/3"

    @pytest.mark.parametrize("text", ["1,2,3", "1,2,3,x", "1,,0,0", "0.5,0,0,0"])
    def test_parse_errors(self, hamilton, text):
        with pytest.raises(ParseError):
            Quaternion.parse(text, hamilton)

    def test_real_and_zero(self, quat):
        assert quat(3).is_real
        assert not quat(3, 1).is_real
        assert quat().is_zero


class TestFloatMode:
    def test_tolerant_equality(self):
        params = AlgebraParams(-1, -1, ScalarKind.FLOAT64)
        p = Quaternion.of(0.1, 0.2, 0, 0, params)
        q = Quaternion.of(0.3, 0, 0, 0, params)
        assert p + Quaternion.of(0.2, -0.2, 0, 0, params) == q

    def test_float_parse(self):
        params = AlgebraParams(-1, -1, ScalarKind.FLOAT64)
        assert Quaternion.parse("0.5,1/4,0,0", params).coords == (0.5, 0.25, 0.0, 0.0)

    def test_unhashable(self):
        params = AlgebraParams(-1, -1, ScalarKind.FLOAT64)
        with pytest.raises(TypeError):
            hash(Quaternion.of(0.1, 0, 0, 0, params))

    def test_rational_hash_matches_equality(self, quat):
        assert {quat(1, 2), quat(1, 2), quat(0, 0, 1)} == {quat(0, 0, 1), quat(1, 2)}
