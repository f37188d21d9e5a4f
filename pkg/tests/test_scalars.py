"""Tests for the rational and float64 scalar backends."""

from fractions import Fraction

import pytest

from ncdet.algebra.scalars import (
    ScalarKind,
    format_scalar,
    is_zero_scalar,
    parse_scalar,
    scalar_kind_of,
    scalars_close,
    to_scalar,
)
from ncdet.errors import AlgebraMismatchError, ParseError


class TestParse:
    def test_rational(self):
        assert parse_scalar(" -6/4 ", ScalarKind.RATIONAL) == Fraction(-3, 2)

    def test_rational_rejects_decimal(self):
        with pytest.raises(ParseError):
            parse_scalar("1.5", ScalarKind.RATIONAL)

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_scalar("1/0", ScalarKind.RATIONAL)

    def test_float(self):
        assert parse_scalar("1e-3", ScalarKind.FLOAT64) == 0.001
        assert parse_scalar("3/8", ScalarKind.FLOAT64) == 0.375


class TestFormat:
    def test_lowest_terms(self):
        assert format_scalar(Fraction(10, 4)) == "5/2"
        assert format_scalar(Fraction(-8, 4)) == "-2"

    def test_float(self):
        assert format_scalar(0.25) == "0.25"


class TestCoercion:
    def test_int_to_rational(self):
        value = to_scalar(3, ScalarKind.RATIONAL)
        assert isinstance(value, Fraction) and value == 3

    def test_float_never_promoted(self):
        with pytest.raises(AlgebraMismatchError):
            to_scalar(0.5, ScalarKind.RATIONAL)

    def test_bool_rejected(self):
        with pytest.raises(AlgebraMismatchError):
            to_scalar(True, ScalarKind.RATIONAL)

    def test_kind_of(self):
        assert scalar_kind_of(Fraction(1)) is ScalarKind.RATIONAL
        assert scalar_kind_of(1.0) is ScalarKind.FLOAT64


class TestComparison:
    def test_exact_zero(self):
        assert is_zero_scalar(Fraction(0))
        assert not is_zero_scalar(Fraction(1, 10**30))

    def test_float_tolerance(self):
        assert is_zero_scalar(1e-12)
        assert scalars_close(1.0, 1.0 + 1e-12)
        assert not scalars_close(1.0, 1.001)

    def test_rationals_compare_exactly(self):
        assert not scalars_close(Fraction(1), Fraction(10**20 + 1, 10**20))
