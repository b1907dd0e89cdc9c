"""冪等元による総当たり判定（オラクル）.

有限次元の A = k[x]/I では、部分空間 V̄ が MZ であることと、V̄ に含まれる各冪等元 e について
A·e ⊆ V̄ となることが同値である。A の冪等元はちょうど Σ_{λ∈Λ′} g_λ なので、
汎関数を使わずに A 上の線形代数だけで判定できる。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from mz_studio.application.pipeline import (
    DecisionOptions,
    DecisionProblem,
    DecisionServices,
    nonempty_subsets,
    prepare_problem,
)
from mz_studio.domain.errors import OracleDisagreementError, SubsetBudgetExceeded
from mz_studio.domain.ideal import QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.linalg import RowSpace, Vector
from mz_studio.domain.polynomial import Monomial, Point, Polynomial
from mz_studio.domain.verdict import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraTable:
    """A の階段基底と乗法の構造定数.

    Attributes:
        staircase: A の基底となる階段単項式
        products: products[a][b] = x^{staircase[a]} x^{staircase[b]} の正規形の座標
    """

    staircase: tuple[Monomial, ...]
    products: tuple[tuple[Vector, ...], ...]
    _index: dict[Monomial, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {m: k for k, m in enumerate(self.staircase)})

    @property
    def dimension(self) -> int:
        """d."""
        return len(self.staircase)

    def vector(self, f: Polynomial) -> Vector:
        """階段単項式上に台を持つ f の座標."""
        result = [Fraction(0)] * self.dimension
        for monomial, coefficient in f:
            if monomial not in self._index:
                raise ValueError(f"{f!r} is not in normal form")
            result[self._index[monomial]] = coefficient
        return tuple(result)

    def identity(self) -> Vector:
        """1 の座標."""
        return self.vector(Polynomial.one(len(self.staircase[0])))

    def multiply(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
        """座標で表した元の積."""
        result = [Fraction(0)] * self.dimension
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, z in enumerate(self.products[i][j]):
                    if z:
                        result[k] += x * y * z
        return tuple(result)


def multiplication_table(quotient: QuotientData) -> AlgebraTable:
    """階段基底どうしの積の正規形を並べた表を作る."""
    staircase = quotient.staircase
    products = tuple(
        tuple(quotient.coordinates(Polynomial.monomial(a).mul_monomial(b)) for b in staircase)
        for a in staircase
    )
    return AlgebraTable(staircase, products)


@dataclass(frozen=True)
class OracleResult:
    """総当たり判定の結果.

    Attributes:
        is_mz: MZ 空間か
        subsets_checked: 調べた Λ′ の数
        witness_subset: e_{Λ′} ∈ V̄ かつ A·e_{Λ′} ⊄ V̄ となった最初の Λ′
        witness_monomial: x^m e_{Λ′} ∉ V̄ となった最初の階段単項式
        idempotents_in_subspace: e_{Λ′} ∈ V̄ となるすべての Λ′
    """

    is_mz: bool
    subsets_checked: int
    witness_subset: tuple[Point, ...] | None = None
    witness_monomial: Monomial | None = None
    idempotents_in_subspace: tuple[tuple[Point, ...], ...] = ()


def _ideal_escape(
    element: Vector, space: RowSpace, table: AlgebraTable
) -> Monomial | None:
    """x^m·element ∉ space となる最初の階段単項式 m（なければ None）."""
    for k, monomial in enumerate(table.staircase):
        unit = tuple(Fraction(int(j == k)) for j in range(table.dimension))
        if not space.contains(table.multiply(unit, element)):
            return monomial
    return None


def brute_force_decide(
    family: IdempotentFamily,
    vbasis: Sequence[Polynomial],
    table: AlgebraTable,
    subset_cap: int,
) -> OracleResult:
    """すべての冪等元 e_{Λ′} = Σ_{λ∈Λ′} g_λ について e ∈ V̄ ⇒ A·e ⊆ V̄ を確かめる.

    Raises:
        SubsetBudgetExceeded: |Λ| が subset_cap を超える場合
    """
    points = family.points()
    if len(points) > subset_cap:
        raise SubsetBudgetExceeded(len(points), subset_cap)
    space = RowSpace.span([table.vector(v) for v in vbasis], table.dimension)
    vectors = {p: table.vector(family[p]) for p in points}
    members: list[tuple[Point, ...]] = []
    witness: tuple[tuple[Point, ...], Monomial] | None = None
    checked = 0
    for subset in nonempty_subsets(points):
        checked += 1
        element = tuple(
            sum((vectors[p][k] for p in subset), start=Fraction(0))
            for k in range(table.dimension)
        )
        if not space.contains(element):
            continue
        members.append(subset)
        if witness is None:
            escape = _ideal_escape(element, space, table)
            if escape is not None:
                witness = (subset, escape)
    logger.info("oracle: %d idempotent(s) of %d lie in V/I", len(members), checked)
    return OracleResult(
        is_mz=witness is None,
        subsets_checked=checked,
        witness_subset=witness[0] if witness else None,
        witness_monomial=witness[1] if witness else None,
        idempotents_in_subspace=tuple(members),
    )


@dataclass(frozen=True)
class MembershipVerdict:
    """冪等元の所属だけによる二条件の判定.

    Attributes:
        is_mz: MZ 空間か
        lambda0: g_λ ∈ V̄ となる λ
        condition_i: Λ∖Λ₀ の空でない部分集合の冪等元がどれも V̄ に属さないか
        condition_ii: λ ∈ Λ₀ について A·g_λ ⊆ V̄ か
    """

    is_mz: bool
    lambda0: tuple[Point, ...]
    condition_i: bool
    condition_ii: bool


def membership_decide(
    family: IdempotentFamily,
    vbasis: Sequence[Polynomial],
    table: AlgebraTable,
    subset_cap: int,
) -> MembershipVerdict:
    """汎関数を使わずに二条件を所属判定で調べる.

    Raises:
        SubsetBudgetExceeded: |Λ∖Λ₀| が subset_cap を超える場合
    """
    space = RowSpace.span([table.vector(v) for v in vbasis], table.dimension)
    vectors = {p: table.vector(family[p]) for p in family.points()}
    lambda0 = tuple(p for p in family.points() if space.contains(vectors[p]))
    outside = [p for p in family.points() if p not in lambda0]
    if len(outside) > subset_cap:
        raise SubsetBudgetExceeded(len(outside), subset_cap)
    condition_i = not any(
        space.contains(
            tuple(
                sum((vectors[p][k] for p in subset), start=Fraction(0))
                for k in range(table.dimension)
            )
        )
        for subset in nonempty_subsets(outside)
    )
    condition_ii = all(_ideal_escape(vectors[p], space, table) is None for p in lambda0)
    return MembershipVerdict(condition_i and condition_ii, lambda0, condition_i, condition_ii)


def run_oracle(
    problem: DecisionProblem,
    services: DecisionServices,
    options: DecisionOptions | None = None,
) -> OracleResult:
    """判定と同じ前処理の後、総当たりで判定する（汎関数は作らない）."""
    options = options or DecisionOptions()
    prepared = prepare_problem(problem, services, options)
    table = multiplication_table(prepared.quotient)
    return brute_force_decide(prepared.family, prepared.vbasis, table, options.subset_cap)


def confirm_with_oracle(verdict: Verdict, result: OracleResult) -> None:
    """判定とオラクルの一致を確かめる.

    Raises:
        OracleDisagreementError: 結果が一致しない場合
    """
    if verdict.is_mz != result.is_mz:
        raise OracleDisagreementError(
            f"decision says is_mz={verdict.is_mz} but the oracle says is_mz={result.is_mz} "
            f"(witness {result.witness_subset}, {result.witness_monomial})"
        )
    if verdict.is_mz:
        expected = set(nonempty_subsets(list(verdict.lambda0)))
        if expected != set(result.idempotents_in_subspace):
            raise OracleDisagreementError(
                "the idempotents in V/I are not exactly the sums over subsets of Λ₀"
            )
