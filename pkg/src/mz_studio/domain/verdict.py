"""判定結果と証明書のドメインモデル."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from mz_studio.domain.functional import FunctionalSystem
from mz_studio.domain.ideal import GroebnerBasis, QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.polynomial import Monomial, Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum


@dataclass(frozen=True)
class LambdaZero:
    """Λ₀ = {λ ∈ Λ : 𝔏(g_λ) = 0}.

    Attributes:
        points: Λ₀ の元（Λ と同じ順）
    """

    points: tuple[Point, ...]

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ConditionIFailure:
    """条件 i) の違反証明書.

    Attributes:
        subset: 空でない S ⊆ Λ∖Λ₀
        sums: 各 i について Σ_{λ∈S} p_{λ,0}^{(i)}（すべて0）
    """

    subset: tuple[Point, ...]
    sums: tuple[Fraction, ...]


@dataclass(frozen=True)
class ConditionIIFailure:
    """条件 ii) の違反証明書: L_i(x^m g_λ) ≠ 0.

    Attributes:
        point: λ ∈ Λ₀
        monomial: 階段単項式 m
        functional_index: i（0始まり）
        value: L_i(x^m g_λ)
    """

    point: Point
    monomial: Monomial
    functional_index: int
    value: Fraction


@dataclass(frozen=True)
class ConditionOutcome:
    """条件の検査結果.

    Attributes:
        passed: 条件を満たしたか
        checked: 検査した部分集合または三つ組の数
        failure: 最初に見つかった違反（満たした場合は None）
    """

    passed: bool
    checked: int
    failure: ConditionIFailure | ConditionIIFailure | None = None


@dataclass(frozen=True)
class MzAudit:
    """MZ と判定した場合の証明書: 各条件の検査件数."""

    subsets_checked: int
    triples_checked: int


Certificate: TypeAlias = MzAudit | ConditionIFailure | ConditionIIFailure


@dataclass(frozen=True)
class DecisionAudit:
    """判定パイプラインの中間データ.

    Attributes:
        basis: 元のイデアルの簡約グレブナー基底（消去多項式で与えた場合は None）
        eliminants: ユーザー座標での f_1, …, f_n
        quotient: シフト後の J = (f_1, …, f_n) の剰余環データ
        spectrum: Λ とシフト
        family: 冪等元族 g_λ
        system: 汎関数系 𝔏
        appended_vectors: I を J 上で表すために追加したベクトルの数
        dropped_vectors: V̄ の基底を作る際に落としたベクトルの数
    """

    basis: GroebnerBasis | None
    eliminants: tuple[Polynomial, ...]
    quotient: QuotientData
    spectrum: PointSpectrum
    family: IdempotentFamily
    system: FunctionalSystem
    appended_vectors: int = 0
    dropped_vectors: int = 0


@dataclass(frozen=True)
class Verdict:
    """MZ 判定の結果.

    Attributes:
        is_mz: MZ 空間か
        lambda0: Λ₀
        certificate: 判定の証明書
        condition_i: 条件 i) の結果
        condition_ii: 条件 ii) の結果
        audit: 中間データ
    """

    is_mz: bool
    lambda0: LambdaZero
    certificate: Certificate
    condition_i: ConditionOutcome
    condition_ii: ConditionOutcome
    audit: DecisionAudit

    @property
    def spectrum(self) -> PointSpectrum:
        """Λ."""
        return self.audit.spectrum

    @property
    def shift(self) -> tuple[Fraction, ...]:
        """適用したシフト."""
        return self.audit.spectrum.shift
