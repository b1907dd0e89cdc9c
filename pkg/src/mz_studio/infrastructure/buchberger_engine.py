"""Buchberger アルゴリズムによるグレブナー基底計算の実装."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from mz_studio.application.groebner import reduced_basis
from mz_studio.domain.errors import InputError, VariableCountError
from mz_studio.domain.ideal import GroebnerBasis, MonomialOrder, reduce_terms
from mz_studio.domain.polynomial import (
    Monomial,
    Polynomial,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    monomials_are_coprime,
)

logger = logging.getLogger(__name__)


class BuchbergerEngine:
    """Buchberger アルゴリズム.

    S対は正規戦略（lcm が最小のものから、同順位は生成元番号の辞書式）で選び、
    互いに素な先頭項の判定と連鎖判定で不要な対を省く。
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
        basis = [order.monic(g) for g in generators if not g.is_zero()]
        if not basis:
            raise InputError("an ideal needs at least one non-zero generator")
        nvars = basis[0].nvars
        if any(g.nvars != nvars for g in basis):
            raise VariableCountError("generators live in different polynomial rings")

        heads: list[Monomial] = [order.leading_monomial(g) for g in basis]
        pending: set[tuple[int, int]] = {
            (i, j) for j in range(len(basis)) for i in range(j)
        }
        reductions = 0
        while pending:
            pair = min(
                pending,
                key=lambda p: (order.key(monomial_lcm(heads[p[0]], heads[p[1]])), p),
            )
            pending.discard(pair)
            i, j = pair
            if monomials_are_coprime(heads[i], heads[j]):
                continue
            if self._chain_criterion(i, j, heads, pending):
                continue
            remainder = reduce_terms(self._s_polynomial(basis[i], basis[j], order), basis, order)
            reductions += 1
            if remainder.is_zero():
                continue
            basis.append(order.monic(remainder))
            heads.append(order.leading_monomial(basis[-1]))
            new = len(basis) - 1
            pending.update((k, new) for k in range(new))
        logger.debug(
            "buchberger finished: %d generators before reduction, %d S-pair reductions",
            len(basis),
            reductions,
        )
        return reduced_basis(basis, order, nvars)

    @staticmethod
    def _s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
        """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g（f, g はモニック）."""
        head_f = order.leading_monomial(f)
        head_g = order.leading_monomial(g)
        lcm = monomial_lcm(head_f, head_g)
        return f.mul_monomial(monomial_quotient(lcm, head_f)) - g.mul_monomial(
            monomial_quotient(lcm, head_g)
        )

    @staticmethod
    def _chain_criterion(
        i: int, j: int, heads: Sequence[Monomial], pending: set[tuple[int, int]]
    ) -> bool:
        """lt(g_k) | lcm(lt(g_i), lt(g_j)) で (i,k), (j,k) が処理済みの k があるか."""
        lcm = monomial_lcm(heads[i], heads[j])
        for k, head in enumerate(heads):
            if k in (i, j) or not monomial_divides(head, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False
