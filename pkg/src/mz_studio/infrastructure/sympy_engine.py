"""SymPy によるグレブナー基底計算の実装."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import sympy as sp

from mz_studio.application.groebner import reduced_basis
from mz_studio.domain.errors import InputError
from mz_studio.domain.ideal import GroebnerBasis, MonomialOrder
from mz_studio.domain.polynomial import Polynomial


def to_sympy(f: Polynomial, symbols: Sequence[sp.Symbol]) -> sp.Poly:
    """Polynomial を QQ 上の sympy.Poly に変換する."""
    terms = {m: sp.Rational(c.numerator, c.denominator) for m, c in f}
    return sp.Poly.from_dict(terms or {(0,) * f.nvars: 0}, *symbols, domain=sp.QQ)


def from_sympy(poly: sp.Poly, nvars: int) -> Polynomial:
    """sympy.Poly を Polynomial に戻す."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for monomial, coefficient in poly.as_dict().items():
        value = sp.Rational(coefficient)
        terms[tuple(int(e) for e in monomial)] = Fraction(int(value.p), int(value.q))
    return Polynomial(nvars, terms)


class SympyGroebnerEngine:
    """sympy.groebner を用いた実装.

    SymPy の簡約基底を BuchbergerEngine と同じ並び（先頭単項式の降順）に揃える。
    """

    def compute(
        self, generators: Sequence[Polynomial], order: MonomialOrder
    ) -> GroebnerBasis:
        """簡約グレブナー基底を計算する.

        Args:
            generators: 生成元
            order: 単項式順序

        Returns:
            簡約グレブナー基底

        Raises:
            InputError: 生成元が空、またはすべて零の場合
        """
        nonzero = [g for g in generators if not g.is_zero()]
        if not nonzero:
            raise InputError("an ideal needs at least one non-zero generator")
        nvars = nonzero[0].nvars
        symbols = sp.symbols(f"x0:{nvars}")
        polys = [to_sympy(g, symbols) for g in nonzero]
        result = sp.groebner(polys, *symbols, order=order.value, domain=sp.QQ)
        basis = [from_sympy(sp.Poly(g, *symbols, domain=sp.QQ), nvars) for g in result.exprs]
        return reduced_basis(basis, order, nvars)
