"""多項式文字列の構文解析と正準表示のテスト."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from mz_studio.domain.errors import ParseError
from mz_studio.domain.polynomial import Polynomial
from mz_studio.infrastructure.polynomial_parser import (
    default_variables,
    format_polynomial,
    parse_polynomial,
)
from tests.strategies import polynomials

NAMES = ["x1", "x2"]


class TestParse:
    """parse_polynomial."""

    def test_univariate(self) -> None:
        x1 = Polynomial.variable(0, 2)
        assert parse_polynomial("x1^2 - 3*x1 + 2", NAMES) == x1**2 - 3 * x1 + 2

    def test_rational_coefficients(self) -> None:
        x1 = Polynomial.variable(0, 2)
        x2 = Polynomial.variable(1, 2)
        expected = (x1 - Fraction(1, 2)) * (x2 + 3)
        assert parse_polynomial("(x1 - 1/2)*(x2 + 3)", NAMES) == expected
        assert expected.coefficient((0, 0)) == Fraction(-3, 2)

    def test_whitespace_is_ignored(self) -> None:
        assert parse_polynomial(" x1 *x2^ 2 ", NAMES) == parse_polynomial("x1*x2^2", NAMES)

    def test_leading_sign(self) -> None:
        assert parse_polynomial("-x1 + 1", NAMES) == 1 - Polynomial.variable(0, 2)

    def test_no_implicit_multiplication(self) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_polynomial("x1 x2", NAMES)
        assert excinfo.value.position == 3

    def test_number_times_variable_needs_star(self) -> None:
        with pytest.raises(ParseError):
            parse_polynomial("2x1", NAMES)

    def test_unknown_variable(self) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_polynomial("x1 + y", NAMES)
        assert excinfo.value.position == 5
        assert excinfo.value.expected == {"'x1'", "'x2'"}

    def test_zero_denominator(self) -> None:
        with pytest.raises(ParseError):
            parse_polynomial("1/0", NAMES)

    def test_unbalanced_parenthesis(self) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_polynomial("(x1 + 1", NAMES)
        assert "')'" in excinfo.value.expected

    def test_exponent_must_be_natural(self) -> None:
        with pytest.raises(ParseError):
            parse_polynomial("x1^x2", NAMES)

    def test_unexpected_character(self) -> None:
        with pytest.raises(ParseError) as excinfo:
            parse_polynomial("x1 % 2", NAMES)
        assert excinfo.value.position == 3

    def test_empty_input(self) -> None:
        with pytest.raises(ParseError):
            parse_polynomial("", NAMES)


class TestFormat:
    """format_polynomial."""

    def test_zero(self) -> None:
        assert format_polynomial(Polynomial.zero(2), NAMES) == "0"

    def test_canonical_order(self) -> None:
        f = parse_polynomial("2 - 3*x1 + x1^2", NAMES)
        assert format_polynomial(f, NAMES) == "x1^2 - 3*x1 + 2"

    def test_negative_leading_coefficient(self) -> None:
        f = parse_polynomial("-1/2*x1*x2^2 + x2", NAMES)
        assert format_polynomial(f, NAMES) == "-1/2*x1*x2^2 + x2"

    def test_default_variables(self) -> None:
        assert default_variables(3) == ["x0", "x1", "x2"]

    @settings(max_examples=100, deadline=None)
    @given(f=polynomials(2, max_degree=3))
    def test_print_then_parse_is_identity(self, f: Polynomial) -> None:
        assert parse_polynomial(format_polynomial(f, NAMES), NAMES) == f
