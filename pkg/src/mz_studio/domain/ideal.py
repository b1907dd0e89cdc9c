"""イデアルと剰余環のドメインモデル."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from mz_studio.domain.errors import VariableCountError
from mz_studio.domain.polynomial import (
    Monomial,
    Polynomial,
    monomial_divides,
    monomial_mul,
    monomial_quotient,
)


class MonomialOrder(Enum):
    """単項式順序."""

    GREVLEX = "grevlex"
    LEX = "lex"

    def key(self, monomial: Monomial) -> tuple[object, ...]:
        """大きい単項式ほど大きくなるソートキー."""
        if self is MonomialOrder.LEX:
            return tuple(monomial)
        return (sum(monomial), *(-e for e in reversed(monomial)))

    def leading(self, f: Polynomial) -> tuple[Monomial, Fraction]:
        """先頭単項式と先頭係数.

        Raises:
            ValueError: f が零多項式の場合
        """
        if f.is_zero():
            raise ValueError("the zero polynomial has no leading term")
        monomial = max(f.support(), key=self.key)
        return monomial, f.coefficient(monomial)

    def leading_monomial(self, f: Polynomial) -> Monomial:
        """先頭単項式."""
        return self.leading(f)[0]

    def monic(self, f: Polynomial) -> Polynomial:
        """先頭係数で割ってモニックにする."""
        return f.scale(1 / self.leading(f)[1])


def reduce_terms(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder
) -> Polynomial:
    """多変数除算アルゴリズムで f の剰余を求める.

    各ステップで残りの最大項を、先頭単項式で割り切れる最初の除式で消去する。
    割り切れない項は剰余に移す。
    """
    nvars = f.nvars
    heads = [order.leading(g) for g in divisors]
    tails = [{m: c for m, c in g if m != head[0]} for g, head in zip(divisors, heads, strict=True)]
    pending: dict[Monomial, Fraction] = dict(f.terms)
    remainder: dict[Monomial, Fraction] = {}
    while pending:
        monomial = max(pending, key=order.key)
        coefficient = pending.pop(monomial)
        for (head, lead), tail in zip(heads, tails, strict=True):
            if monomial_divides(head, monomial):
                factor = coefficient / lead
                shift = monomial_quotient(monomial, head)
                for m, c in tail.items():
                    key = monomial_mul(m, shift)
                    value = pending.get(key, Fraction(0)) - factor * c
                    if value:
                        pending[key] = value
                    else:
                        pending.pop(key, None)
                break
        else:
            remainder[monomial] = coefficient
    return Polynomial(nvars, remainder)


@dataclass(frozen=True)
class GroebnerBasis:
    """簡約グレブナー基底.

    Attributes:
        generators: 先頭単項式の降順に並んだモニックな生成元
        order: 単項式順序
        nvars: 変数の個数
    """

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    nvars: int

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.nvars != self.nvars:
                raise VariableCountError(
                    f"generator in {g.nvars} variables in a basis of {self.nvars}"
                )

    def leading_monomials(self) -> tuple[Monomial, ...]:
        """各生成元の先頭単項式."""
        return tuple(self.order.leading_monomial(g) for g in self.generators)

    def reduce(self, f: Polynomial) -> Polynomial:
        """f の正規形（基底に関する剰余）."""
        return reduce_terms(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        """イデアル所属判定: NF(f) = 0."""
        return self.reduce(f).is_zero()

    def is_unit_ideal(self) -> bool:
        """生成するイデアルが全体か判定する."""
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


@dataclass(frozen=True)
class QuotientData:
    """剰余環 A = k[x]/I の基底データ.

    Attributes:
        basis: イデアル I の簡約グレブナー基底
        staircase: 階段単項式（A の基底）. 単項式順序の昇順で、先頭は 1
        degrees: I = (f_1(x_1), …, f_n(x_n)) の場合の (d_1, …, d_n)、それ以外は None
    """

    basis: GroebnerBasis
    staircase: tuple[Monomial, ...]
    degrees: tuple[int, ...] | None = None
    _index: dict[Monomial, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {m: k for k, m in enumerate(self.staircase)})

    @property
    def dimension(self) -> int:
        """d = dim_k A."""
        return len(self.staircase)

    @property
    def nvars(self) -> int:
        """変数の個数."""
        return self.basis.nvars

    def normal_form(self, f: Polynomial) -> Polynomial:
        """f の正規形."""
        return self.basis.reduce(f)

    def coordinates(self, f: Polynomial) -> tuple[Fraction, ...]:
        """f の正規形を階段基底の座標で表す."""
        reduced = self.normal_form(f)
        vector = [Fraction(0)] * self.dimension
        for monomial, coefficient in reduced:
            vector[self._index[monomial]] = coefficient
        return tuple(vector)

    def from_coordinates(self, vector: Sequence[Fraction]) -> Polynomial:
        """階段基底の座標から多項式を組み立てる."""
        return Polynomial(self.nvars, dict(zip(self.staircase, vector, strict=True)))

    def index_of(self, monomial: Monomial) -> int:
        """階段単項式の位置."""
        return self._index[monomial]
