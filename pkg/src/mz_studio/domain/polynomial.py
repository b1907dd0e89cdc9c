"""多変数多項式ドメインモデル.

係数体は有理数（fractions.Fraction）に固定する。
数体を導入する場合は Scalar が唯一の差し替え箇所になる。
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from types import MappingProxyType
from typing import TypeAlias

from mz_studio.domain.errors import VariableCountError

Scalar: TypeAlias = Fraction
Monomial: TypeAlias = tuple[int, ...]
Point: TypeAlias = tuple[Fraction, ...]
Coefficient: TypeAlias = Fraction | int


def graded_lex_key(monomial: Monomial) -> tuple[int, Monomial]:
    """表示・ハッシュ用の正準順序（次数→辞書式）のキー."""
    return (sum(monomial), monomial)


def monomial_divides(divisor: Monomial, monomial: Monomial) -> bool:
    """divisor が monomial を割り切るか判定する."""
    return all(a <= b for a, b in zip(divisor, monomial, strict=True))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    """単項式の積."""
    return tuple(x + y for x, y in zip(a, b, strict=True))


def monomial_quotient(monomial: Monomial, divisor: Monomial) -> Monomial:
    """単項式の商. divisor が割り切ることを前提とする."""
    return tuple(x - y for x, y in zip(monomial, divisor, strict=True))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    """単項式の最小公倍元."""
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def monomials_are_coprime(a: Monomial, b: Monomial) -> bool:
    """共通変数を持たないか判定する."""
    return all(x == 0 or y == 0 for x, y in zip(a, b, strict=True))


def box_monomials(bounds: Sequence[int]) -> list[Monomial]:
    """m < bounds（成分ごと）を満たす単項式をすべて返す.

    順序は itertools.product の順（最初の変数が最上位）。
    """
    return [tuple(m) for m in itertools.product(*(range(b) for b in bounds))]


def d_eigenvalue(exponents: Monomial, monomial: Monomial) -> int:
    """D^i(x^m) = m_1^{i_1}…m_n^{i_n} x^m の係数を返す（0^0 = 1）."""
    return math.prod(m**i for i, m in zip(exponents, monomial, strict=True))


class Polynomial:
    """有理数係数の多変数多項式.

    係数0の項は保持しない正準形で、項の並びは次数→辞書式の降順に固定する。
    生成後は変更しない。

    Attributes:
        nvars: 変数の個数 n
        terms: 単項式（指数ベクトル）→ 係数 の読み取り専用マップ
    """

    __slots__ = ("_hash", "_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Coefficient] | None = None) -> None:
        if nvars < 1:
            raise VariableCountError(f"a polynomial needs at least one variable, got {nvars}")
        store: dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            key = tuple(monomial)
            if len(key) != nvars:
                raise VariableCountError(
                    f"monomial {key} does not have {nvars} exponents"
                )
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            value = Fraction(coefficient)
            if value:
                store[key] = store.get(key, Fraction(0)) + value
        ordered = sorted(
            ((m, c) for m, c in store.items() if c),
            key=lambda item: graded_lex_key(item[0]),
            reverse=True,
        )
        self._nvars = nvars
        self._terms: dict[Monomial, Fraction] = dict(ordered)
        self._hash: int | None = None

    # ---- 生成 ----

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        """零多項式."""
        return cls(nvars)

    @classmethod
    def constant(cls, value: Coefficient, nvars: int) -> Polynomial:
        """定数多項式."""
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        """定数 1."""
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> Polynomial:
        """変数 x_index（0始まり）."""
        if not 0 <= index < nvars:
            raise VariableCountError(f"variable index {index} out of range for n={nvars}")
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, exponents: Monomial, coefficient: Coefficient = 1) -> Polynomial:
        """単項式 coefficient * x^exponents."""
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def from_univariate(
        cls, coefficients: Sequence[Coefficient], index: int, nvars: int
    ) -> Polynomial:
        """x_index の一変数多項式（係数は低次から）を n 変数多項式として埋め込む."""
        terms: dict[Monomial, Coefficient] = {}
        for power, coefficient in enumerate(coefficients):
            exponents = [0] * nvars
            exponents[index] = power
            terms[tuple(exponents)] = coefficient
        return cls(nvars, terms)

    # ---- 参照 ----

    @property
    def nvars(self) -> int:
        """変数の個数."""
        return self._nvars

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """単項式 → 係数 の読み取り専用ビュー."""
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        """零多項式か判定する."""
        return not self._terms

    def is_constant(self) -> bool:
        """定数（零を含む）か判定する."""
        return all(not any(m) for m in self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        """指定単項式の係数（無ければ0）."""
        return self._terms.get(tuple(monomial), Fraction(0))

    def support(self) -> tuple[Monomial, ...]:
        """係数が非零の単項式（正準順）."""
        return tuple(self._terms)

    def degree_in(self, index: int) -> int:
        """x_index についての次数. 零多項式は -1."""
        return max((m[index] for m in self._terms), default=-1)

    def multidegree(self) -> Monomial:
        """Deg f = (deg_{x_1} f, …, deg_{x_n} f)."""
        return tuple(max(0, self.degree_in(i)) for i in range(self._nvars))

    def total_degree(self) -> int:
        """全次数. 零多項式は -1."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_univariate_in(self, index: int) -> bool:
        """x_index 以外の変数を含まないか判定する."""
        return all(
            all(e == 0 for k, e in enumerate(m) if k != index) for m in self._terms
        )

    def univariate_coefficients(self, index: int) -> tuple[Fraction, ...]:
        """x_index の一変数多項式とみて係数列（低次から）を返す."""
        if not self.is_univariate_in(index):
            raise ValueError(f"{self!r} is not univariate in variable {index}")
        coefficients = [Fraction(0)] * (self.degree_in(index) + 1)
        for monomial, coefficient in self._terms.items():
            coefficients[monomial[index]] = coefficient
        return tuple(coefficients)

    # ---- 演算 ----

    def _coerce(self, other: Polynomial | Coefficient) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self._nvars:
                raise VariableCountError(
                    f"cannot combine polynomials in {self._nvars} and {other.nvars} variables"
                )
            return other
        return Polynomial.constant(other, self._nvars)

    def __add__(self, other: Polynomial | Coefficient) -> Polynomial:
        rhs = self._coerce(other)
        result = dict(self._terms)
        for monomial, coefficient in rhs._terms.items():
            result[monomial] = result.get(monomial, Fraction(0)) + coefficient
        return Polynomial(self._nvars, result)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self._nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | Coefficient) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Polynomial | Coefficient) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: Polynomial | Coefficient) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        rhs = self._coerce(other)
        result: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                key = monomial_mul(m1, m2)
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self._nvars, result)

    def __rmul__(self, other: Coefficient) -> Polynomial:
        return self.scale(other)

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self._nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Coefficient) -> Polynomial:
        """スカラー倍."""
        value = Fraction(factor)
        return Polynomial(self._nvars, {m: c * value for m, c in self._terms.items()})

    def mul_monomial(self, exponents: Monomial, coefficient: Coefficient = 1) -> Polynomial:
        """coefficient * x^exponents を掛ける."""
        value = Fraction(coefficient)
        return Polynomial(
            self._nvars,
            {monomial_mul(m, exponents): c * value for m, c in self._terms.items()},
        )

    def evaluate(self, point: Sequence[Coefficient]) -> Fraction:
        """点 point での値 f(point)."""
        return evaluate(self, point)

    # ---- 比較・表示 ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = Polynomial.constant(other, self._nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x^{m}" for m, c in self._terms.items()) or "0"
        return f"Polynomial({body})"


def evaluate(f: Polynomial, point: Sequence[Coefficient]) -> Fraction:
    """代入写像 S_λ: f ↦ f(λ) を厳密に計算する.

    Args:
        f: 多項式
        point: n 個の有理数からなる点

    Returns:
        f(point)
    """
    if len(point) != f.nvars:
        raise VariableCountError(f"point has {len(point)} coordinates, expected {f.nvars}")
    values = [Fraction(p) for p in point]
    total = Fraction(0)
    for monomial, coefficient in f:
        term = coefficient
        for value, exponent in zip(values, monomial, strict=True):
            if exponent:
                term *= value**exponent
        total += term
    return total


def apply_d(f: Polynomial, index: int) -> Polynomial:
    """D_j = x_j ∂/∂x_j を適用する. 単項式 x^m は m_j x^m に移る."""
    if not 0 <= index < f.nvars:
        raise VariableCountError(f"variable index {index} out of range for n={f.nvars}")
    return Polynomial(f.nvars, {m: m[index] * c for m, c in f})


def apply_p_of_d(p: Polynomial, f: Polynomial) -> Polynomial:
    """P(D) を f に適用する.

    P の各単項式 x^i を D_1^{i_1}∘…∘D_n^{i_n} に置き換える。
    D_j は可換なので合成順序は問わない。
    """
    if p.nvars != f.nvars:
        raise VariableCountError(
            f"operator in {p.nvars} variables applied to polynomial in {f.nvars}"
        )
    result: dict[Monomial, Fraction] = {}
    for monomial, coefficient in f:
        weight = sum(
            (c * d_eigenvalue(i, monomial) for i, c in p),
            start=Fraction(0),
        )
        if weight:
            result[monomial] = weight * coefficient
    return Polynomial(f.nvars, result)


def linear_combination(
    coefficients: Iterable[Coefficient], polynomials: Iterable[Polynomial], nvars: int
) -> Polynomial:
    """Σ c_k f_k."""
    result: dict[Monomial, Fraction] = {}
    for coefficient, polynomial in zip(coefficients, polynomials, strict=True):
        value = Fraction(coefficient)
        if not value:
            continue
        for monomial, c in polynomial:
            result[monomial] = result.get(monomial, Fraction(0)) + value * c
    return Polynomial(nvars, result)
