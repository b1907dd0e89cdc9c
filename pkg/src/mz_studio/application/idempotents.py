"""直交冪等元 g_λ の構成と検証.

A = k[x]/(f_1, …, f_n) は各変数の k[x_i]/(f_i) のテンソル積なので、
g_λ は一変数の中国剰余冪等元 h_{i,λ_i} の積の正規形として得られる。
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from mz_studio.application.groebner import eliminant_basis
from mz_studio.domain import univariate as up
from mz_studio.domain.errors import IdempotentFamilyError
from mz_studio.domain.ideal import GroebnerBasis, QuotientData
from mz_studio.domain.idempotent import (
    FamilyVerification,
    FamilyViolation,
    IdempotentFamily,
    ViolationKind,
)
from mz_studio.domain.polynomial import Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum, RootList
from mz_studio.domain.univariate import UniPoly

logger = logging.getLogger(__name__)


def univariate_crt_factors(rootlist: RootList) -> dict[Fraction, UniPoly]:
    """各根 λ_i について h ≡ 1 mod (t-λ_i)^m, h ≡ 0 mod 他の局所因子 となる h を返す.

    (t-λ_i)^m と f/(t-λ_i)^m の拡張ユークリッド互除法 s·a + c·b = 1 から
    h = c·b mod f とする。
    """
    f = up.from_roots(rootlist.roots)
    factors: dict[Fraction, UniPoly] = {}
    for root, multiplicity in rootlist.roots:
        local = up.power(up.linear(root), multiplicity)
        rest = up.exact_div(f, local)
        unit, _, cofactor = up.xgcd(local, rest)
        if unit != up.ONE:
            raise IdempotentFamilyError(f"local factors at {root} are not coprime")
        factors[root] = up.rem(up.mul(cofactor, rest), f)
    return factors


def build_g_lambda(spectrum: PointSpectrum, quotient: QuotientData) -> IdempotentFamily:
    """g_λ = NF(∏_i h_{i,λ_i}) の族を作る."""
    nvars = spectrum.nvars
    embedded = [
        {
            root: Polynomial.from_univariate(h, rootlist.index, nvars)
            for root, h in univariate_crt_factors(rootlist).items()
        }
        for rootlist in spectrum.rootlists
    ]
    elements: dict[Point, Polynomial] = {}
    for point in spectrum.points:
        product = Polynomial.one(nvars)
        for factors, value in zip(embedded, point, strict=True):
            product = quotient.normal_form(product * factors[value])
        elements[point] = product
    logger.debug("built %d idempotents", len(elements))
    return IdempotentFamily(spectrum, elements)


def _local_power(point: Point, multiplicity: tuple[int, ...], index: int) -> UniPoly:
    return up.power(up.linear(point[index]), multiplicity[index])


def build_g_lambda_pairwise(
    spectrum: PointSpectrum, quotient: QuotientData
) -> IdempotentFamily:
    """g_λ = ∏_{μ≠λ} i_μ の族を作る.

    i_λ + i_μ = 1 となる i_λ ∈ [(x-λ)]^{m(λ)}, i_μ ∈ [(x-μ)]^{m(μ)} を、
    λ と μ が異なる最初の座標での一変数の Bézout 等式から得る。
    """
    nvars = spectrum.nvars
    elements: dict[Point, Polynomial] = {}
    for point in spectrum.points:
        m_point = spectrum.multiplicity(point)
        product = Polynomial.one(nvars)
        for other in spectrum.points:
            if other == point:
                continue
            m_other = spectrum.multiplicity(other)
            index = next(k for k in range(nvars) if point[k] != other[k])
            other_power = _local_power(other, m_other, index)
            _, s, _ = up.xgcd(other_power, _local_power(point, m_point, index))
            i_other = Polynomial.from_univariate(up.mul(s, other_power), index, nvars)
            product = quotient.normal_form(product * i_other)
        elements[point] = product
    return IdempotentFamily(spectrum, elements)


def local_ideal_basis(spectrum: PointSpectrum, point: Point) -> GroebnerBasis:
    """[(x-λ)]^{m(λ)} = ((x_1-λ_1)^{m(λ_1)}, …, (x_n-λ_n)^{m(λ_n)}) の基底."""
    multiplicity = spectrum.multiplicity(point)
    nvars = spectrum.nvars
    generators = [
        Polynomial.from_univariate(_local_power(point, multiplicity, index), index, nvars)
        for index in range(nvars)
    ]
    return eliminant_basis(generators)


def verify_family(family: IdempotentFamily, quotient: QuotientData) -> FamilyVerification:
    """冪等元族の4条件を正規形で検査し、最初の違反を返す.

    検査順: 非零 → 冪等 → 直交 → 和が1 → 局所合同.
    """
    points = family.points()
    nvars = quotient.nvars
    for point in points:
        if quotient.normal_form(family[point]).is_zero():
            return FamilyVerification(False, FamilyViolation(ViolationKind.ZERO, (point,)))
    for point in points:
        g = family[point]
        if not quotient.normal_form(g * g - g).is_zero():
            return FamilyVerification(
                False, FamilyViolation(ViolationKind.NOT_IDEMPOTENT, (point,))
            )
    for a, b in itertools.combinations(points, 2):
        if not quotient.normal_form(family[a] * family[b]).is_zero():
            return FamilyVerification(
                False, FamilyViolation(ViolationKind.NOT_ORTHOGONAL, (a, b))
            )
    total = sum((family[p] for p in points), start=Polynomial.zero(nvars))
    if not quotient.normal_form(total - 1).is_zero():
        return FamilyVerification(False, FamilyViolation(ViolationKind.SUM_NOT_ONE))
    for local_point in points:
        local = local_ideal_basis(family.spectrum, local_point)
        for point in points:
            expected = 1 if point == local_point else 0
            if not local.contains(family[point] - expected):
                return FamilyVerification(
                    False,
                    FamilyViolation(ViolationKind.LOCAL_CONGRUENCE, (point, local_point)),
                )
    return FamilyVerification(True)
