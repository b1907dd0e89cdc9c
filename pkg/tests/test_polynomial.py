"""多項式ドメインモデルのテスト."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mz_studio.domain import linalg
from mz_studio.domain import univariate as up
from mz_studio.domain.errors import SingularMatrixError, VariableCountError
from mz_studio.domain.polynomial import Polynomial, apply_d, apply_p_of_d, evaluate
from tests.strategies import ROOT_POOL, polynomials

x1 = Polynomial.variable(0, 2)
x2 = Polynomial.variable(1, 2)


class TestArithmetic:
    """環演算."""

    def test_difference_of_squares(self) -> None:
        assert (x1 + 1) * (x1 - 1) == x1**2 - 1

    def test_adding_zero(self) -> None:
        f = x1**2 + 3 * x2
        assert f + Polynomial.zero(2) == f

    def test_monomial_square(self) -> None:
        assert (x1 * x2) * (x1 * x2) == Polynomial.monomial((2, 2))

    def test_zero_coefficients_are_dropped(self) -> None:
        f = Polynomial(2, {(1, 0): 1, (0, 1): 0})
        assert f.support() == ((1, 0),)
        assert (x1 - x1).is_zero()

    def test_mixing_rings_is_rejected(self) -> None:
        with pytest.raises(VariableCountError):
            _ = x1 + Polynomial.variable(0, 1)

    def test_univariate_coefficients(self) -> None:
        f = x2**2 - 3 * x2 + 2
        assert f.univariate_coefficients(1) == (2, -3, 1)
        assert not (x1 * x2).is_univariate_in(0)

    @settings(max_examples=50, deadline=None)
    @given(f=polynomials(2), g=polynomials(2), h=polynomials(2))
    def test_ring_axioms(self, f: Polynomial, g: Polynomial, h: Polynomial) -> None:
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f


class TestEvaluate:
    """代入写像."""

    def test_direct_substitution(self) -> None:
        assert evaluate(x1**2 + x2, (2, 3)) == 7

    def test_constant(self) -> None:
        assert evaluate(Polynomial.one(2), (Fraction(5, 7), -4)) == 1

    def test_root_of_a_factor(self) -> None:
        assert evaluate((x1 - 1) * (x2 - 2), (1, 5)) == 0

    def test_wrong_point_length(self) -> None:
        with pytest.raises(VariableCountError):
            evaluate(x1, (1,))


class TestEulerOperators:
    """D_j = x_j ∂/∂x_j とその多項式."""

    def test_eigenvalue_rule(self) -> None:
        assert apply_d(x1**2 * x2, 0) == 2 * x1**2 * x2

    def test_constant_is_killed(self) -> None:
        assert apply_d(Polynomial.one(2), 1).is_zero()

    def test_linearity(self) -> None:
        assert apply_d(3 * x1 + x2, 0) == 3 * x1

    def test_single_application(self) -> None:
        t = Polynomial.variable(0, 1)
        assert apply_p_of_d(t, t**3) == 3 * t**3

    def test_identity_operator(self) -> None:
        f = x1**3 - x2 + 5
        assert apply_p_of_d(Polynomial.one(2), f) == f

    @settings(max_examples=50, deadline=None)
    @given(
        b=polynomials(1, max_degree=2),
        root=st.sampled_from(ROOT_POOL),
        p=st.integers(min_value=0, max_value=2),
        extra=st.integers(min_value=1, max_value=2),
    )
    def test_power_of_d_keeps_local_divisibility(
        self, b: Polynomial, root: Fraction, p: int, extra: int
    ) -> None:
        t = Polynomial.variable(0, 1)
        q = p + extra
        image = apply_p_of_d(t**p, b * (t - root) ** q)
        coefficients = up.normalize(image.univariate_coefficients(0))
        assert up.rem(coefficients, up.power(up.linear(root), q - p)) == ()

    def test_mixed_operator(self) -> None:
        assert apply_p_of_d(x1 * x2, x1**2 * x2**5) == 10 * x1**2 * x2**5
        assert apply_p_of_d(x1 * x2, x1**2 * x2**5) == apply_d(apply_d(x1**2 * x2**5, 0), 1)


class TestUnivariate:
    """一変数多項式の演算."""

    def test_xgcd_bezout(self) -> None:
        f = up.from_roots([(Fraction(1), 2)])
        g = up.linear(2)
        unit, s, t = up.xgcd(f, g)
        assert unit == up.ONE
        assert up.add(up.mul(s, f), up.mul(t, g)) == up.ONE

    def test_divmod(self) -> None:
        quotient, remainder = up.divmod_(up.normalize([2, -3, 1]), up.linear(1))
        assert quotient == up.linear(2)
        assert remainder == ()


class TestLinalg:
    """有理数行列."""

    def test_nullspace_of_empty_constraints(self) -> None:
        assert linalg.nullspace([], 2) == [(1, 0), (0, 1)]

    def test_inverse_of_singular_matrix(self) -> None:
        with pytest.raises(SingularMatrixError):
            linalg.inverse([[1, 2], [2, 4]])

    def test_rowspace_membership(self) -> None:
        space = linalg.RowSpace.span([(Fraction(1), Fraction(1), Fraction(0))], 3)
        assert space.contains((2, 2, 0))
        assert not space.contains((1, 0, 0))

    def test_determinant(self) -> None:
        assert linalg.determinant([[1, 1], [1, 2]]) == 1
