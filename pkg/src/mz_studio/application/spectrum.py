"""根の集合 Λ の構成と座標シフト."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from mz_studio.application.root_finder import RootFinder
from mz_studio.domain.errors import InvalidShiftError, VariableCountError
from mz_studio.domain.polynomial import Coefficient, Monomial, Polynomial
from mz_studio.domain.spectrum import PointSpectrum, RootList

logger = logging.getLogger(__name__)


def choose_shift(rootlists: Sequence[RootList]) -> tuple[Fraction, ...]:
    """各変数について λ_i + c_i ≠ 0 となる最小の非負整数 c_i を選ぶ."""
    shift: list[Fraction] = []
    for rootlist in rootlists:
        values = set(rootlist.values)
        c = next(c for c in itertools.count() if -c not in values)
        shift.append(Fraction(c))
    return tuple(shift)


def _shifted_power(exponent: int, offset: Fraction) -> dict[int, Fraction]:
    """(t - offset)^exponent の係数（次数 → 係数）."""
    return {
        k: math.comb(exponent, k) * (-offset) ** (exponent - k) for k in range(exponent + 1)
    }


def apply_shift(
    f: Polynomial, shift: Sequence[Coefficient], *, inverse: bool = False
) -> Polynomial:
    """x_i ↦ x_i - c_i（inverse=True なら x_i ↦ x_i + c_i）を代入する.

    f の根 λ は λ + c に移る。
    """
    if len(shift) != f.nvars:
        raise VariableCountError(f"shift has {len(shift)} entries, expected {f.nvars}")
    offsets = [Fraction(-c if inverse else c) for c in shift]
    if not any(offsets):
        return f
    result: dict[Monomial, Fraction] = {}
    for monomial, coefficient in f:
        partial: dict[Monomial, Fraction] = {(0,) * f.nvars: coefficient}
        for index, exponent in enumerate(monomial):
            if not exponent:
                continue
            expansion = _shifted_power(exponent, offsets[index])
            partial = {
                tuple(e + power if k == index else e for k, e in enumerate(m)): c * factor
                for m, c in partial.items()
                for power, factor in expansion.items()
            }
        for m, c in partial.items():
            result[m] = result.get(m, Fraction(0)) + c
    return Polynomial(f.nvars, result)


def build_spectrum(
    eliminants: Sequence[Polynomial],
    root_finder: RootFinder,
    shift_override: Sequence[Coefficient] | None = None,
) -> PointSpectrum:
    """消去多項式を分解し、0 を含まないようにシフトした Λ を作る.

    Args:
        eliminants: ユーザー座標での f_1, …, f_n
        root_finder: 根の分解の実装
        shift_override: 指定するシフト（省略時は choose_shift）

    Returns:
        シフト後の Λ

    Raises:
        NonSplittingError: 消去多項式が分解しない場合
        InvalidShiftError: 指定シフトで根が 0 になる場合
    """
    rootlists = [root_finder.find_roots(f, index) for index, f in enumerate(eliminants)]
    if shift_override is None:
        shift = choose_shift(rootlists)
    else:
        if len(shift_override) != len(rootlists):
            raise VariableCountError(
                f"shift has {len(shift_override)} entries, expected {len(rootlists)}"
            )
        shift = tuple(Fraction(c) for c in shift_override)
        for rootlist, c in zip(rootlists, shift, strict=True):
            if -c in rootlist.values:
                raise InvalidShiftError(
                    f"shift {c} moves root {-c} of x{rootlist.index} to 0"
                )
    shifted = tuple(
        rootlist.shifted(c) for rootlist, c in zip(rootlists, shift, strict=True)
    )
    spectrum = PointSpectrum(shifted, shift)
    logger.info(
        "spectrum: %s; shift %s",
        "; ".join(
            f"x{r.index}: " + ", ".join(f"{root}^{m}" for root, m in r.roots) for r in shifted
        ),
        ", ".join(str(c) for c in shift),
    )
    return spectrum
