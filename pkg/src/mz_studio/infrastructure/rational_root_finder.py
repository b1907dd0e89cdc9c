"""有理数体上の根の分解.

無平方分解（Yun のアルゴリズム）の各因子について、有理根定理の候補 ±p/q を
厳密な代入で確かめる。一次式に分解しきれない因子は NonSplittingError とする。
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

import sympy as sp

from mz_studio.domain import univariate as up
from mz_studio.domain.errors import InternalConsistencyError, NonSplittingError
from mz_studio.domain.polynomial import Polynomial
from mz_studio.domain.spectrum import RootList
from mz_studio.domain.univariate import UniPoly
from mz_studio.infrastructure.polynomial_parser import default_variables, format_polynomial

logger = logging.getLogger(__name__)


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """f = ∏ h_j^j となる互いに素でモニックな無平方因子 h_j を返す.

    Args:
        f: モニックで次数1以上の一変数多項式

    Returns:
        (h_j, j) の列. j の昇順で、h_j = 1 の項は含まない
    """
    if up.degree(f) < 1:
        raise ValueError("square-free decomposition needs a polynomial of degree >= 1")
    f = up.monic(f)
    result: list[tuple[UniPoly, int]] = []
    a = up.gcd(f, up.derivative(f))
    b = up.exact_div(f, a)
    c = up.exact_div(up.derivative(f), a)
    d = up.sub(c, up.derivative(b))
    multiplicity = 1
    while up.degree(b) > 0:
        a = up.gcd(b, d)
        b = up.exact_div(b, a)
        c = up.exact_div(d, a)
        d = up.sub(c, up.derivative(b))
        if up.degree(a) > 0:
            result.append((a, multiplicity))
        multiplicity += 1
    return result


def _integer_coefficients(f: UniPoly) -> list[int]:
    denominator = math.lcm(*(c.denominator for c in f))
    return [int(c * denominator) for c in f]


def _candidates(f: UniPoly) -> list[Fraction]:
    """有理根の候補 ±p/q（p | 定数項, q | 最高次係数）. f(0) ≠ 0 を前提とする."""
    coefficients = _integer_coefficients(f)
    numerators = sp.divisors(abs(coefficients[0]))
    denominators = sp.divisors(abs(coefficients[-1]))
    values = {
        Fraction(sign * int(p), int(q))
        for p in numerators
        for q in denominators
        for sign in (1, -1)
    }
    return sorted(values)


def _linear_roots(factor: UniPoly) -> tuple[list[Fraction], UniPoly]:
    """無平方因子の有理根と、一次式を取り除いた残りの因子."""
    roots: list[Fraction] = []
    rest = factor
    if rest and not rest[0]:
        roots.append(Fraction(0))
        rest = up.exact_div(rest, up.linear(0))
    if up.degree(rest) > 0:
        for candidate in _candidates(rest):
            if up.degree(rest) == 0:
                break
            if up.evaluate(rest, candidate) == 0:
                roots.append(candidate)
                rest = up.exact_div(rest, up.linear(candidate))
    return roots, up.monic(rest)


def rational_roots(eliminant: Polynomial, index: int) -> RootList:
    """f_i(x_i) の有理根と重複度を求める.

    Args:
        eliminant: x_index のモニックな一変数多項式
        index: 変数番号

    Returns:
        根の昇順の RootList（∏ (x_i - λ_i)^{m(λ_i)} = f_i を確認済み）

    Raises:
        NonSplittingError: 一次式の積に分解しない場合
    """
    f = up.monic(up.normalize(eliminant.univariate_coefficients(index)))
    roots: dict[Fraction, int] = {}
    for factor, multiplicity in squarefree_decomposition(f):
        found, rest = _linear_roots(factor)
        if up.degree(rest) > 0:
            nvars = eliminant.nvars
            offending = Polynomial.from_univariate(rest, index, nvars)
            raise NonSplittingError(
                offending, index, format_polynomial(offending, default_variables(nvars))
            )
        for root in found:
            roots[root] = multiplicity
    ordered = tuple(sorted(roots.items()))
    if up.from_roots(ordered) != f:
        raise InternalConsistencyError(f"roots {ordered} do not reconstruct the eliminant")
    logger.debug("x%d: roots %s", index, ordered)
    return RootList(index, ordered)


class RationalRootFinder:
    """有理数体上で分解する RootFinder の実装."""

    def find_roots(self, eliminant: Polynomial, index: int) -> RootList:
        """f_i(x_i) の根と重複度を求める.

        Raises:
            NonSplittingError: 有理数体上で一次式の積に分解しない場合
        """
        return rational_roots(eliminant, index)
