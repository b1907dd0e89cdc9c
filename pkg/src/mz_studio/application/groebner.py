"""グレブナー基底と剰余環の操作.

基底の計算自体は GroebnerEngine の実装（infrastructure）に任せ、
ここでは正規形・余次元・階段基底・消去多項式など基底から導く操作を提供する。
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Protocol

from mz_studio.domain import linalg
from mz_studio.domain.errors import InfiniteCodimensionError, InputError, VariableCountError
from mz_studio.domain.ideal import GroebnerBasis, MonomialOrder, QuotientData, reduce_terms
from mz_studio.domain.polynomial import (
    Monomial,
    Polynomial,
    box_monomials,
    monomial_divides,
)

logger = logging.getLogger(__name__)

# 余次元が無限であることを表す
INFINITE = math.inf


class GroebnerEngine(Protocol):
    """簡約グレブナー基底計算のインターフェース."""

    def compute(
        self, generators: Sequence[Polynomial], order: MonomialOrder
    ) -> GroebnerBasis:
        """generators が生成するイデアルの簡約グレブナー基底を返す.

        Args:
            generators: 生成元（空でなく、すべてが零ではない）
            order: 単項式順序

        Returns:
            先頭単項式の降順に並んだ簡約グレブナー基底
        """
        ...


def reduced_basis(
    polynomials: Sequence[Polynomial], order: MonomialOrder, nvars: int
) -> GroebnerBasis:
    """グレブナー基底を極小化・相互簡約して簡約グレブナー基底にする."""
    monics = [order.monic(p) for p in polynomials if not p.is_zero()]
    heads = [order.leading_monomial(p) for p in monics]
    minimal: list[Polynomial] = []
    for k, (p, head) in enumerate(zip(monics, heads, strict=True)):
        redundant = any(
            monomial_divides(other, head) and (other != head or j < k)
            for j, other in enumerate(heads)
            if j != k
        )
        if not redundant:
            minimal.append(p)
    result: list[Polynomial] = []
    for k, p in enumerate(minimal):
        head = order.leading_monomial(p)
        others = minimal[:k] + minimal[k + 1 :]
        tail = p - Polynomial.monomial(head)
        result.append(Polynomial.monomial(head) + reduce_terms(tail, others, order))
    result.sort(key=lambda g: order.key(order.leading_monomial(g)), reverse=True)
    return GroebnerBasis(tuple(result), order, nvars)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """f を基底で割った一意な剰余（階段単項式上に台を持つ）."""
    return basis.reduce(f)


def _pure_power_bounds(basis: GroebnerBasis) -> list[int | None]:
    bounds: list[int | None] = [None] * basis.nvars
    for head in basis.leading_monomials():
        used = [i for i, e in enumerate(head) if e]
        if not used:
            return [0] * basis.nvars
        if len(used) == 1:
            i = used[0]
            current = bounds[i]
            bounds[i] = head[i] if current is None else min(current, head[i])
    return bounds


def quotient_dimension(basis: GroebnerBasis) -> int | float:
    """d = dim_k k[x]/I. どれかの変数の純冪が先頭単項式に無ければ INFINITE."""
    bounds = _pure_power_bounds(basis)
    if any(b is None for b in bounds):
        return INFINITE
    return len(_staircase(basis, [b for b in bounds if b is not None]))


def _staircase(basis: GroebnerBasis, bounds: Sequence[int]) -> list[Monomial]:
    heads = basis.leading_monomials()
    staircase = [
        m for m in box_monomials(bounds) if not any(monomial_divides(h, m) for h in heads)
    ]
    staircase.sort(key=basis.order.key)
    return staircase


def _eliminant_degrees(basis: GroebnerBasis) -> tuple[int, ...] | None:
    """基底が (f_1(x_1), …, f_n(x_n)) の形なら (d_1, …, d_n)."""
    if len(basis.generators) != basis.nvars:
        return None
    degrees = [0] * basis.nvars
    for g in basis.generators:
        index = next((i for i in range(basis.nvars) if g.degree_in(i) > 0), None)
        if index is None or not g.is_univariate_in(index) or degrees[index]:
            return None
        degrees[index] = g.degree_in(index)
    return tuple(degrees)


def build_quotient(basis: GroebnerBasis) -> QuotientData:
    """階段基底を持つ剰余環データを作る.

    Raises:
        InfiniteCodimensionError: 余次元が無限の場合
        InputError: イデアルが全体（単位イデアル）の場合
    """
    if basis.is_unit_ideal():
        raise InputError("the ideal is the whole ring; k[x]/I is zero")
    bounds = _pure_power_bounds(basis)
    missing = [i for i, b in enumerate(bounds) if b is None]
    if missing:
        raise InfiniteCodimensionError(missing)
    staircase = _staircase(basis, [b for b in bounds if b is not None])
    logger.debug("staircase of size %d computed", len(staircase))
    return QuotientData(basis, tuple(staircase), _eliminant_degrees(basis))


def univariate_eliminant(quotient: QuotientData, index: int) -> Polynomial:
    """I に含まれる x_index のモニックな最小次数多項式 f_i(x_i).

    1, x_i, x_i^2, … の正規形の最初の一次従属関係から求める。
    """
    nvars = quotient.nvars
    if not 0 <= index < nvars:
        raise VariableCountError(f"variable index {index} out of range for n={nvars}")
    variable = Polynomial.variable(index, nvars)
    columns: list[tuple[Fraction, ...]] = []
    power = quotient.normal_form(Polynomial.one(nvars))
    for k in range(quotient.dimension + 1):
        coordinates = quotient.coordinates(power)
        relation = linalg.solve(columns, coordinates) if columns else None
        if relation is not None or not any(coordinates):
            coefficients = [-c for c in relation or ()] + [Fraction(1)]
            eliminant = Polynomial.from_univariate(coefficients, index, nvars)
            logger.debug("eliminant of x%d has degree %d", index, k)
            return eliminant
        columns.append(coordinates)
        power = quotient.normal_form(power * variable)
    raise ArithmeticError("no linear dependence among d+1 powers")  # pragma: no cover


def eliminant_basis(
    eliminants: Sequence[Polynomial], order: MonomialOrder = MonomialOrder.GREVLEX
) -> GroebnerBasis:
    """J = (f_1(x_1), …, f_n(x_n)) の簡約グレブナー基底.

    異なる変数のモニックな一変数多項式の族はそのまま簡約グレブナー基底である。
    """
    nvars = len(eliminants)
    for index, f in enumerate(eliminants):
        if not f.is_univariate_in(index) or f.degree_in(index) < 1:
            raise InputError(f"eliminant {index} must be univariate in x{index} of degree >= 1")
    monics = [order.monic(f) for f in eliminants]
    monics.sort(key=lambda g: order.key(order.leading_monomial(g)), reverse=True)
    return GroebnerBasis(tuple(monics), order, nvars)


def represent_over_eliminants(
    generators: Sequence[Polynomial],
    eliminants: Sequence[Polynomial],
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> list[Polynomial]:
    """I を J = (f_1, …, f_n) を法として張るベクトルの一次独立な組.

    {x^m q : q ∈ generators, m < (d_1, …, d_n)} の J に関する正規形を行簡約する。
    これを v_j に追加すれば I = J と仮定してよい。
    """
    quotient = build_quotient(eliminant_basis(eliminants, order))
    box = box_monomials(quotient.degrees or ())
    rows = [
        quotient.coordinates(q.mul_monomial(m)) for q in generators for m in box
    ]
    reduced, _ = linalg.rref(rows, quotient.dimension) if rows else ([], [])
    spanning = [quotient.from_coordinates(row) for row in reduced]
    logger.info("ideal re-presented over eliminants with %d extra vector(s)", len(spanning))
    return spanning
