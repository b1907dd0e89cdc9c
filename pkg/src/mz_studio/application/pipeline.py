"""判定パイプラインの前処理.

グレブナー基底 → 消去多項式 → J 上での表し直し → 根の分解 → シフト →
冪等元族 → V̄ の基底 までを行う。判定（mzdecide）とオラクル（oracle）が共有する。
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from mz_studio.application.dualspace import reduce_subspace
from mz_studio.application.groebner import (
    GroebnerEngine,
    build_quotient,
    eliminant_basis,
    represent_over_eliminants,
    univariate_eliminant,
)
from mz_studio.application.idempotents import build_g_lambda, verify_family
from mz_studio.application.root_finder import RootFinder
from mz_studio.application.spectrum import apply_shift, build_spectrum
from mz_studio.domain.errors import IdempotentFamilyError, InputError, VariableCountError
from mz_studio.domain.functional import SubspaceSpec
from mz_studio.domain.ideal import GroebnerBasis, MonomialOrder, QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.polynomial import Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_CAP = 20


@dataclass(frozen=True)
class DecisionProblem:
    """判定対象 V = I + k v_1 + … + k v_h.

    I は任意の生成元（generators）か消去多項式（eliminants）のどちらか一方で与える。

    Attributes:
        nvars: 変数の個数
        generators: I の生成元
        eliminants: f_1(x_1), …, f_n(x_n)
        vectors: v_1, …, v_h
    """

    nvars: int
    generators: tuple[Polynomial, ...] = ()
    eliminants: tuple[Polynomial, ...] = ()
    vectors: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        if bool(self.generators) == bool(self.eliminants):
            raise InputError("give the ideal either by generators or by eliminants")
        if self.eliminants and len(self.eliminants) != self.nvars:
            raise VariableCountError(
                f"{len(self.eliminants)} eliminants given for {self.nvars} variables"
            )
        for f in (*self.generators, *self.eliminants, *self.vectors):
            if f.nvars != self.nvars:
                raise VariableCountError(f"{f!r} is not in {self.nvars} variables")


@dataclass(frozen=True)
class DecisionOptions:
    """判定のオプション.

    Attributes:
        subset_cap: 部分集合の列挙を許す集合の大きさの上限
        shift_override: 座標シフトの指定（省略時は自動選択）
        order: グレブナー基底の単項式順序
        cross_check: Λ₀ を g_λ 上の直接評価とも照合するか
    """

    subset_cap: int = DEFAULT_SUBSET_CAP
    shift_override: tuple[Fraction, ...] | None = None
    order: MonomialOrder = MonomialOrder.GREVLEX
    cross_check: bool = False


@dataclass(frozen=True)
class DecisionServices:
    """パイプラインが使う実装の組."""

    engine: GroebnerEngine
    root_finder: RootFinder


@dataclass(frozen=True)
class PreparedProblem:
    """前処理済みの問題（シフト後の座標）.

    Attributes:
        basis: 元のイデアルの簡約グレブナー基底（消去多項式で与えた場合は None）
        eliminants: ユーザー座標での f_1, …, f_n
        spectrum: シフト後の Λ
        quotient: シフト後の J = (f_1, …, f_n) の剰余環データ
        family: 冪等元族
        subspace: シフト後の消去多項式とベクトル（追加分を含む）
        vbasis: V̄ の基底
        appended_vectors: I を J 上で表すために追加したベクトルの数
        dropped_vectors: V̄ の基底を作る際に落としたベクトルの数
    """

    basis: GroebnerBasis | None
    eliminants: tuple[Polynomial, ...]
    spectrum: PointSpectrum
    quotient: QuotientData
    family: IdempotentFamily
    subspace: SubspaceSpec
    vbasis: tuple[Polynomial, ...]
    appended_vectors: int = 0
    dropped_vectors: int = 0


def _checked_eliminants(
    eliminants: Sequence[Polynomial], order: MonomialOrder
) -> tuple[Polynomial, ...]:
    result: list[Polynomial] = []
    for index, f in enumerate(eliminants):
        if not f.is_univariate_in(index) or f.degree_in(index) < 1:
            raise InputError(f"eliminant {index} must be univariate in x{index} of degree >= 1")
        result.append(order.monic(f))
    return tuple(result)


def prepare_problem(
    problem: DecisionProblem, services: DecisionServices, options: DecisionOptions
) -> PreparedProblem:
    """冪等元族と V̄ の基底までを求める.

    Raises:
        InfiniteCodimensionError: I の余次元が無限の場合
        NonSplittingError: 消去多項式が有理数体上で分解しない場合
        IdempotentFamilyError: 構成した冪等元族が検証に失敗した場合
    """
    order = options.order
    basis: GroebnerBasis | None = None
    appended: list[Polynomial] = []
    if problem.generators:
        basis = services.engine.compute(problem.generators, order)
        quotient_i = build_quotient(basis)
        logger.info(
            "groebner basis with %d element(s), d=%d",
            len(basis.generators),
            quotient_i.dimension,
        )
        eliminants = tuple(
            univariate_eliminant(quotient_i, index) for index in range(problem.nvars)
        )
        appended = represent_over_eliminants(basis.generators, eliminants, order)
    else:
        eliminants = _checked_eliminants(problem.eliminants, order)
    logger.info("eliminant degrees %s", [f.total_degree() for f in eliminants])

    spectrum = build_spectrum(eliminants, services.root_finder, options.shift_override)
    shifted = SubspaceSpec(
        tuple(apply_shift(f, spectrum.shift) for f in eliminants),
        tuple(apply_shift(v, spectrum.shift) for v in (*appended, *problem.vectors)),
    )
    quotient = build_quotient(eliminant_basis(shifted.eliminants, order))
    family = build_g_lambda(spectrum, quotient)
    verification = verify_family(family, quotient)
    if not verification.is_valid:
        raise IdempotentFamilyError(f"idempotent family check failed: {verification.violation}")
    vbasis, dropped = reduce_subspace(shifted, quotient)
    logger.info("dim V/I = %d of d = %d", len(vbasis), quotient.dimension)
    return PreparedProblem(
        basis=basis,
        eliminants=eliminants,
        spectrum=spectrum,
        quotient=quotient,
        family=family,
        subspace=shifted,
        vbasis=tuple(vbasis),
        appended_vectors=len(appended),
        dropped_vectors=dropped,
    )


def nonempty_subsets(points: Sequence[Point]) -> Iterator[tuple[Point, ...]]:
    """空でない部分集合を、大きさ→添字の辞書式の順に列挙する."""
    for size in range(1, len(points) + 1):
        yield from itertools.combinations(points, size)
