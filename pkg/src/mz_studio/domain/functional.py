"""部分空間と線形汎関数のドメインモデル."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from mz_studio.domain.errors import VariableCountError
from mz_studio.domain.polynomial import Monomial, Point, Polynomial

# (λ, j): 汎関数 S_λ∘D^j の添字
FunctionalKey: TypeAlias = tuple[Point, Monomial]


@dataclass(frozen=True)
class SubspaceSpec:
    """V = I + k v_1 + … + k v_h の記述.

    Attributes:
        eliminants: f_1(x_1), …, f_n(x_n)（モニック、次数1以上）
        vectors: v_1, …, v_h
    """

    eliminants: tuple[Polynomial, ...]
    vectors: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        nvars = len(self.eliminants)
        for index, f in enumerate(self.eliminants):
            if f.nvars != nvars:
                raise VariableCountError(f"eliminant {index} is not in {nvars} variables")
            if not f.is_univariate_in(index) or f.degree_in(index) < 1:
                raise ValueError(f"eliminant {index} must be univariate of positive degree")
            if f.coefficient(_pure_power(index, f.degree_in(index), nvars)) != 1:
                raise ValueError(f"eliminant {index} must be monic")
        for v in self.vectors:
            if v.nvars != nvars:
                raise VariableCountError(f"vector {v!r} is not in {nvars} variables")

    @property
    def nvars(self) -> int:
        """変数の個数."""
        return len(self.eliminants)


def _pure_power(index: int, exponent: int, nvars: int) -> Monomial:
    exponents = [0] * nvars
    exponents[index] = exponent
    return tuple(exponents)


@dataclass(frozen=True)
class Functional:
    """L = Σ_λ S_λ∘P_λ(D) の係数表.

    Attributes:
        coefficients: (λ, j) → p_{λ,j}. キーは λ ∈ Λ と j < m(λ) をちょうど網羅する
        values: 階段単項式上の値 L(x^m)（解いた元の値ベクトル）
    """

    coefficients: Mapping[FunctionalKey, Fraction]
    values: tuple[Fraction, ...] = ()

    def operator(self, point: Point) -> Polynomial:
        """P_λ を多項式として返す."""
        terms = {j: c for (p, j), c in self.coefficients.items() if p == point}
        nvars = len(point)
        return Polynomial(nvars, terms)

    def constant_coefficient(self, point: Point) -> Fraction:
        """p_{λ,0} = P_λ(0)."""
        return self.coefficients[(point, (0,) * len(point))]


@dataclass(frozen=True)
class ElementaryMatrix:
    """初等汎関数 S_λ∘D^j を行、階段単項式を列とする d×d 行列.

    Attributes:
        rows: 行の添字 (λ, j)
        columns: 列の単項式 x^m
        entries: 成分 m^j λ^m
    """

    rows: tuple[FunctionalKey, ...]
    columns: tuple[Monomial, ...]
    entries: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FunctionalSystem:
    """ker 𝔏 = V となる汎関数系 𝔏 = (L_1, …, L_r).

    Attributes:
        functionals: L_1, …, L_r
        reduced_basis: V̄ の階段単項式上の基底
        keys: 係数表の添字 (λ, j) の並び
    """

    functionals: tuple[Functional, ...]
    reduced_basis: tuple[Polynomial, ...]
    keys: tuple[FunctionalKey, ...]

    @property
    def rank(self) -> int:
        """r = d - dim V̄."""
        return len(self.functionals)

    def __iter__(self) -> Iterator[Functional]:
        return iter(self.functionals)

    def __len__(self) -> int:
        return len(self.functionals)
