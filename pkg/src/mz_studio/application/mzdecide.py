"""MZ 空間の判定.

V が MZ 空間であることは次の二条件の両方と同値である。
    i)  空でない S ⊆ Λ∖Λ₀ それぞれについて Σ_{λ∈S} P_λ^{(i)}(0) ≠ 0 となる i がある
    ii) λ ∈ Λ₀ について L_i(k[x] g_λ) = 0（すべての i）

条件 i) は Λ′ ⊆ Λ に依存するのが Λ′∖Λ₀ だけなので Λ∖Λ₀ の部分集合を調べれば足りる。
条件 ii) は線形性から一点ずつの検査に帰着し、x^m は階段単項式に限ってよい。
"""

from __future__ import annotations

import logging
from fractions import Fraction

from mz_studio.application.dualspace import (
    annihilator_functionals,
    elementary_matrix,
    evaluate_functional,
    functional_at_idempotent,
)
from mz_studio.application.pipeline import (
    DecisionOptions,
    DecisionProblem,
    DecisionServices,
    nonempty_subsets,
    prepare_problem,
)
from mz_studio.domain.errors import FunctionalConsistencyError, SubsetBudgetExceeded
from mz_studio.domain.functional import FunctionalSystem
from mz_studio.domain.ideal import QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.polynomial import Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum
from mz_studio.domain.verdict import (
    Certificate,
    ConditionIFailure,
    ConditionIIFailure,
    ConditionOutcome,
    DecisionAudit,
    LambdaZero,
    MzAudit,
    Verdict,
)

logger = logging.getLogger(__name__)


def compute_lambda0(
    system: FunctionalSystem,
    spectrum: PointSpectrum,
    *,
    family: IdempotentFamily | None = None,
) -> LambdaZero:
    """Λ₀ = {λ : すべての i で P_λ^{(i)}(0) = 0}.

    family を渡すと L_i(g_λ) の直接評価とも照合する。

    Raises:
        FunctionalConsistencyError: 照合に失敗した場合
    """
    members: list[Point] = []
    for point in spectrum.points:
        values = [functional_at_idempotent(L, point) for L in system]
        if family is not None:
            direct = [evaluate_functional(L, family[point]) for L in system]
            if direct != values:
                raise FunctionalConsistencyError(
                    f"L(g_λ) at {point}: table gives {values}, evaluation gives {direct}"
                )
        if not any(values):
            members.append(point)
    return LambdaZero(tuple(members))


def check_condition_i(
    system: FunctionalSystem,
    spectrum: PointSpectrum,
    lambda0: LambdaZero,
    subset_cap: int,
) -> ConditionOutcome:
    """条件 i) を検査する.

    Raises:
        SubsetBudgetExceeded: |Λ∖Λ₀| が subset_cap を超える場合
    """
    outside = [p for p in spectrum.points if p not in lambda0]
    if len(outside) > subset_cap:
        raise SubsetBudgetExceeded(len(outside), subset_cap)
    constants = {p: [L.constant_coefficient(p) for L in system] for p in outside}
    checked = 0
    for subset in nonempty_subsets(outside):
        checked += 1
        sums = tuple(
            sum((constants[p][i] for p in subset), start=Fraction(0))
            for i in range(system.rank)
        )
        if not any(sums):
            return ConditionOutcome(False, checked, ConditionIFailure(subset, sums))
    return ConditionOutcome(True, checked)


def check_condition_ii(
    system: FunctionalSystem,
    lambda0: LambdaZero,
    family: IdempotentFamily,
    quotient: QuotientData,
) -> ConditionOutcome:
    """条件 ii) を (λ ∈ Λ₀, 階段単項式 m, i) の三つ組で検査する."""
    checked = 0
    for point in lambda0:
        g = family[point]
        for monomial in quotient.staircase:
            product = quotient.normal_form(g.mul_monomial(monomial))
            for index, L in enumerate(system):
                checked += 1
                value = evaluate_functional(L, product)
                if value:
                    failure = ConditionIIFailure(point, monomial, index, value)
                    return ConditionOutcome(False, checked, failure)
    return ConditionOutcome(True, checked)


def check_condition_ii_exhaustive(
    system: FunctionalSystem,
    lambda0: LambdaZero,
    family: IdempotentFamily,
    quotient: QuotientData,
    subset_cap: int,
) -> ConditionOutcome:
    """条件 ii) をそのままの形で検査する: 空でない T ⊆ Λ₀ について L_i(x^m Σ_T g_λ) = 0.

    一点ずつの検査との一致を確かめるためのもの。失敗しても証明書は返さない。
    """
    points = list(lambda0)
    if len(points) > subset_cap:
        raise SubsetBudgetExceeded(len(points), subset_cap)
    checked = 0
    for subset in nonempty_subsets(points):
        element = sum((family[p] for p in subset), start=Polynomial.zero(quotient.nvars))
        for monomial in quotient.staircase:
            product = quotient.normal_form(element.mul_monomial(monomial))
            for L in system:
                checked += 1
                if evaluate_functional(L, product):
                    return ConditionOutcome(False, checked)
    return ConditionOutcome(True, checked)


def decide(
    problem: DecisionProblem,
    services: DecisionServices,
    options: DecisionOptions | None = None,
) -> Verdict:
    """V が MZ 空間か判定する.

    Raises:
        InfiniteCodimensionError: I の余次元が無限の場合
        NonSplittingError: 消去多項式が有理数体上で分解しない場合
        SubsetBudgetExceeded: 条件 i) の列挙が上限を超える場合
    """
    options = options or DecisionOptions()
    prepared = prepare_problem(problem, services, options)
    spectrum = prepared.spectrum
    quotient = prepared.quotient
    matrix = elementary_matrix(spectrum, quotient)
    system = annihilator_functionals(list(prepared.vbasis), matrix, quotient, spectrum)

    lambda0 = compute_lambda0(
        system, spectrum, family=prepared.family if options.cross_check else None
    )
    logger.info("|Λ₀| = %d of |Λ| = %d", len(lambda0), len(spectrum.points))
    condition_i = check_condition_i(system, spectrum, lambda0, options.subset_cap)
    condition_ii = check_condition_ii(system, lambda0, prepared.family, quotient)
    logger.info(
        "condition i) %s after %d subset(s); condition ii) %s after %d triple(s)",
        "passed" if condition_i.passed else "failed",
        condition_i.checked,
        "passed" if condition_ii.passed else "failed",
        condition_ii.checked,
    )

    certificate: Certificate
    if condition_i.failure is not None:
        certificate = condition_i.failure
    elif condition_ii.failure is not None:
        certificate = condition_ii.failure
    else:
        certificate = MzAudit(condition_i.checked, condition_ii.checked)
    audit = DecisionAudit(
        basis=prepared.basis,
        eliminants=prepared.eliminants,
        quotient=quotient,
        spectrum=spectrum,
        family=prepared.family,
        system=system,
        appended_vectors=prepared.appended_vectors,
        dropped_vectors=prepared.dropped_vectors,
    )
    return Verdict(
        is_mz=condition_i.passed and condition_ii.passed,
        lambda0=lambda0,
        certificate=certificate,
        condition_i=condition_i,
        condition_ii=condition_ii,
        audit=audit,
    )


def recheck_certificate(verdict: Verdict) -> bool:
    """証明書を中間データから再計算して確かめる.

    条件 i) の違反は部分和を、条件 ii) の違反は x^m g_λ（正規形を取らない）上の値を
    計算し直す。MZ の場合は Λ₀ と両条件を計算し直す。
    """
    audit = verdict.audit
    system = audit.system
    certificate = verdict.certificate
    if isinstance(certificate, ConditionIFailure):
        subset = certificate.subset
        if not subset or any(p in verdict.lambda0 for p in subset):
            return False
        sums = tuple(
            sum((L.constant_coefficient(p) for p in subset), start=Fraction(0)) for L in system
        )
        return sums == certificate.sums and not any(sums)
    if isinstance(certificate, ConditionIIFailure):
        if certificate.point not in verdict.lambda0:
            return False
        element = audit.family[certificate.point].mul_monomial(certificate.monomial)
        value = evaluate_functional(system.functionals[certificate.functional_index], element)
        return value != 0 and value == certificate.value
    lambda0 = compute_lambda0(system, audit.spectrum)
    if lambda0 != verdict.lambda0:
        return False
    outside = len(audit.spectrum.points) - len(lambda0)
    condition_i = check_condition_i(system, audit.spectrum, lambda0, outside)
    condition_ii = check_condition_ii(system, lambda0, audit.family, audit.quotient)
    return condition_i.passed and condition_ii.passed
