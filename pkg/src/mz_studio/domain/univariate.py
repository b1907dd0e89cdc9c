"""一変数多項式の密表現と基本演算.

係数は低次から並べた Fraction のタプルで表し、末尾（最高次）に0を残さない。
零多項式は空タプル。
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import TypeAlias

from mz_studio.domain.polynomial import Coefficient

UniPoly: TypeAlias = tuple[Fraction, ...]

ONE: UniPoly = (Fraction(1),)


def normalize(coefficients: Sequence[Coefficient]) -> UniPoly:
    """末尾の0を除いた正準形にする."""
    values = [Fraction(c) for c in coefficients]
    while values and not values[-1]:
        values.pop()
    return tuple(values)


def degree(f: UniPoly) -> int:
    """次数. 零多項式は -1."""
    return len(f) - 1


def leading_coefficient(f: UniPoly) -> Fraction:
    """最高次係数."""
    return f[-1] if f else Fraction(0)


def add(f: UniPoly, g: UniPoly) -> UniPoly:
    """和."""
    size = max(len(f), len(g))
    return normalize(
        [(f[k] if k < len(f) else 0) + (g[k] if k < len(g) else 0) for k in range(size)]
    )


def sub(f: UniPoly, g: UniPoly) -> UniPoly:
    """差."""
    return add(f, scale(g, -1))


def scale(f: UniPoly, factor: Coefficient) -> UniPoly:
    """スカラー倍."""
    return normalize([c * factor for c in f])


def mul(f: UniPoly, g: UniPoly) -> UniPoly:
    """積."""
    if not f or not g:
        return ()
    result = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            result[i + j] += a * b
    return normalize(result)


def power(f: UniPoly, exponent: int) -> UniPoly:
    """冪."""
    result = ONE
    for _ in range(exponent):
        result = mul(result, f)
    return result


def linear(root: Coefficient) -> UniPoly:
    """t - root."""
    return normalize([-Fraction(root), 1])


def divmod_(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """除算 f = q*g + r（deg r < deg g）.

    Raises:
        ZeroDivisionError: g が零多項式の場合
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    remainder = list(f)
    quotient = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    for shift in range(len(f) - len(g), -1, -1):
        factor = remainder[shift + len(g) - 1] / lead
        if not factor:
            continue
        quotient[shift] = factor
        for k, c in enumerate(g):
            remainder[shift + k] -= factor * c
    return normalize(quotient), normalize(remainder)


def rem(f: UniPoly, g: UniPoly) -> UniPoly:
    """f mod g."""
    return divmod_(f, g)[1]


def exact_div(f: UniPoly, g: UniPoly) -> UniPoly:
    """割り切れることが分かっている除算."""
    quotient, remainder = divmod_(f, g)
    if remainder:
        raise ArithmeticError("polynomial division is not exact")
    return quotient


def monic(f: UniPoly) -> UniPoly:
    """最高次係数を1にする. 零多項式はそのまま."""
    if not f:
        return f
    return scale(f, 1 / f[-1])


def derivative(f: UniPoly) -> UniPoly:
    """形式微分."""
    return normalize([k * c for k, c in enumerate(f)][1:])


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """モニックな最大公約元."""
    a, b = f, g
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """拡張ユークリッド互除法.

    Returns:
        (h, s, t): s*f + t*g = h かつ h はモニックな gcd(f, g)
    """
    r0, r1 = f, g
    s0, s1 = ONE, ()
    t0, t1 = (), ONE
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), (), ()
    lead = r0[-1]
    return scale(r0, 1 / lead), scale(s0, 1 / lead), scale(t0, 1 / lead)


def evaluate(f: UniPoly, value: Coefficient) -> Fraction:
    """ホーナー法による値."""
    result = Fraction(0)
    for c in reversed(f):
        result = result * value + c
    return result


def from_roots(roots: Sequence[tuple[Coefficient, int]]) -> UniPoly:
    """∏ (t - λ)^m を展開する."""
    result = ONE
    for root, multiplicity in roots:
        result = mul(result, power(linear(root), multiplicity))
    return result
