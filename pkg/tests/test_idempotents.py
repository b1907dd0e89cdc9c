"""冪等元族 g_λ の構成と検証のテスト."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mz_studio.application.groebner import build_quotient, eliminant_basis
from mz_studio.application.idempotents import (
    build_g_lambda,
    build_g_lambda_pairwise,
    local_ideal_basis,
    univariate_crt_factors,
    verify_family,
)
from mz_studio.application.spectrum import apply_shift, build_spectrum
from mz_studio.domain import univariate as up
from mz_studio.domain.ideal import QuotientData
from mz_studio.domain.idempotent import ViolationKind
from mz_studio.domain.polynomial import Polynomial
from mz_studio.domain.spectrum import PointSpectrum, RootList
from mz_studio.infrastructure.rational_root_finder import RationalRootFinder
from tests.strategies import eliminant, root_lists


def _prepare(eliminants: list[Polynomial]) -> tuple[PointSpectrum, QuotientData]:
    spectrum = build_spectrum(eliminants, RationalRootFinder())
    shifted = [apply_shift(f, spectrum.shift) for f in eliminants]
    return spectrum, build_quotient(eliminant_basis(shifted))


t = Polynomial.variable(0, 1)


class TestUnivariateFactors:
    """一変数の中国剰余冪等元."""

    def test_two_simple_roots(self) -> None:
        factors = univariate_crt_factors(RootList(0, ((Fraction(1), 1), (Fraction(2), 1))))
        assert factors[Fraction(1)] == up.normalize([2, -1])
        assert factors[Fraction(2)] == up.normalize([-1, 1])

    def test_single_root(self) -> None:
        factors = univariate_crt_factors(RootList(0, ((Fraction(1), 1),)))
        assert factors == {Fraction(1): up.ONE}

    def test_repeated_root(self) -> None:
        factors = univariate_crt_factors(RootList(0, ((Fraction(1), 2), (Fraction(2), 1))))
        assert factors[Fraction(2)] == up.from_roots([(1, 2)])
        assert factors[Fraction(1)] == up.normalize([0, 2, -1])

    @settings(max_examples=50, deadline=None)
    @given(roots=root_lists())
    def test_local_congruences(self, roots: tuple[tuple[Fraction, int], ...]) -> None:
        factors = univariate_crt_factors(RootList(0, roots))
        for root, multiplicity in roots:
            local = up.power(up.linear(root), multiplicity)
            for other, h in factors.items():
                expected = up.ONE if other == root else ()
                assert up.rem(up.sub(h, expected), local) == ()


class TestBuildFamily:
    """g_λ の構成."""

    def test_two_points(self) -> None:
        spectrum, quotient = _prepare([(t - 1) * (t - 2)])
        family = build_g_lambda(spectrum, quotient)
        assert family[(1,)] == 2 - t
        assert family[(2,)] == t - 1

    def test_single_point_is_one(self) -> None:
        spectrum, quotient = _prepare([(t - 3) ** 2])
        family = build_g_lambda(spectrum, quotient)
        assert family[(3,)] == 1

    def test_tensor_with_trivial_factor(self) -> None:
        x1 = Polynomial.variable(0, 2)
        x2 = Polynomial.variable(1, 2)
        spectrum, quotient = _prepare([(x1 - 1) * (x1 - 2), x2 - 1])
        family = build_g_lambda(spectrum, quotient)
        assert family[(1, 1)] == 2 - x1
        assert family[(2, 1)] == x1 - 1

    def test_shifted_points(self) -> None:
        spectrum, quotient = _prepare([t * (t + 1)])
        assert spectrum.shift == (2,)
        family = build_g_lambda(spectrum, quotient)
        assert verify_family(family, quotient).is_valid
        assert set(family.points()) == {(1,), (2,)}


class TestVerifyFamily:
    """四条件の検査."""

    def test_constructed_family_is_valid(self) -> None:
        spectrum, quotient = _prepare([(t - 1) ** 2 * (t - 2)])
        verification = verify_family(build_g_lambda(spectrum, quotient), quotient)
        assert verification.is_valid
        assert verification.violation is None

    def test_zero_element(self) -> None:
        spectrum, quotient = _prepare([(t - 1) * (t - 2)])
        family = build_g_lambda(spectrum, quotient).replace((1,), Polynomial.zero(1))
        verification = verify_family(family, quotient)
        assert not verification.is_valid
        assert verification.violation is not None
        assert verification.violation.kind is ViolationKind.ZERO
        assert verification.violation.points == ((1,),)

    def test_sum_of_two_idempotents(self) -> None:
        spectrum, quotient = _prepare([(t - 1) * (t - 2) * (t - 3)])
        family = build_g_lambda(spectrum, quotient)
        merged = family.replace((1,), quotient.normal_form(family[(1,)] + family[(2,)]))
        verification = verify_family(merged, quotient)
        assert verification.violation is not None
        assert verification.violation.kind is ViolationKind.NOT_ORTHOGONAL
        assert verification.violation.points == ((1,), (2,))

    def test_not_idempotent(self) -> None:
        spectrum, quotient = _prepare([(t - 1) * (t - 2)])
        family = build_g_lambda(spectrum, quotient).replace((1,), 2 - 2 * t)
        verification = verify_family(family, quotient)
        assert verification.violation is not None
        assert verification.violation.kind is ViolationKind.NOT_IDEMPOTENT

    def test_swapped_labels_break_local_congruence(self) -> None:
        spectrum, quotient = _prepare([(t - 1) * (t - 2)])
        family = build_g_lambda(spectrum, quotient)
        swapped = family.replace((1,), family[(2,)]).replace((2,), family[(1,)])
        verification = verify_family(swapped, quotient)
        assert verification.violation is not None
        assert verification.violation.kind is ViolationKind.LOCAL_CONGRUENCE

    def test_local_ideal(self) -> None:
        spectrum, _ = _prepare([(t - 1) ** 2 * (t - 2)])
        local = local_ideal_basis(spectrum, (1,))
        assert local.contains((t - 1) ** 2)
        assert not local.contains(t - 1)


@st.composite
def two_variable_eliminants(draw: st.DrawFn) -> list[Polynomial]:
    first = draw(root_lists(max_degree=2))
    second = draw(root_lists(max_degree=2))
    return [eliminant(first, 0, 2), eliminant(second, 1, 2)]


class TestTensorConsistency:
    """積による構成と対ごとの構成の一致."""

    @settings(max_examples=50, deadline=None)
    @given(eliminants=two_variable_eliminants())
    def test_product_equals_pairwise(self, eliminants: list[Polynomial]) -> None:
        spectrum, quotient = _prepare(eliminants)
        tensor = build_g_lambda(spectrum, quotient)
        pairwise = build_g_lambda_pairwise(spectrum, quotient)
        assert verify_family(tensor, quotient).is_valid
        for point in spectrum.points:
            assert tensor[point] == pairwise[point]

    @settings(max_examples=50, deadline=None)
    @given(roots=root_lists())
    def test_family_invariants_in_one_variable(
        self, roots: tuple[tuple[Fraction, int], ...]
    ) -> None:
        spectrum, quotient = _prepare([eliminant(roots, 0, 1)])
        family = build_g_lambda(spectrum, quotient)
        assert verify_family(family, quotient).is_valid
        total = sum((family[p] for p in family.points()), start=Polynomial.zero(1))
        assert quotient.normal_form(total) == 1

    @settings(max_examples=30, deadline=None)
    @given(first=root_lists(max_degree=4), second=root_lists(max_degree=3))
    def test_family_invariants_with_triple_roots(
        self,
        first: tuple[tuple[Fraction, int], ...],
        second: tuple[tuple[Fraction, int], ...],
    ) -> None:
        spectrum, quotient = _prepare([eliminant(first, 0, 2), eliminant(second, 1, 2)])
        assert quotient.dimension <= 12
        family = build_g_lambda(spectrum, quotient)
        assert verify_family(family, quotient).is_valid
        for p in family.points():
            for q in family.points():
                product = quotient.normal_form(family[p] * family[q])
                assert product == (quotient.normal_form(family[p]) if p == q else 0)
        total = sum((family[p] for p in family.points()), start=Polynomial.zero(2))
        assert quotient.normal_form(total) == 1
