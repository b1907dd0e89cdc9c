"""根の集合 Λ のドメインモデル."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from mz_studio.domain.polynomial import Monomial, Point


@dataclass(frozen=True)
class RootList:
    """消去多項式 f_i(x_i) の根と重複度.

    Attributes:
        index: 変数番号 i（0始まり）
        roots: (λ_i, m(λ_i)) の列. λ_i の昇順で互いに異なる
    """

    index: int
    roots: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        values = [root for root, _ in self.roots]
        if len(set(values)) != len(values):
            raise ValueError(f"repeated root in {self.roots}")
        if any(m < 1 for _, m in self.roots):
            raise ValueError(f"non-positive multiplicity in {self.roots}")

    @property
    def degree(self) -> int:
        """d_i = Σ m(λ_i)."""
        return sum(m for _, m in self.roots)

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Λ_i."""
        return tuple(root for root, _ in self.roots)

    def multiplicity(self, root: Fraction) -> int:
        """m(λ_i)."""
        return dict(self.roots)[root]

    def shifted(self, offset: Fraction) -> RootList:
        """全ての根に offset を足した RootList."""
        return RootList(self.index, tuple((root + offset, m) for root, m in self.roots))


@dataclass(frozen=True)
class PointSpectrum:
    """Λ = Λ_1 × … × Λ_n と重複度ベクトル.

    Attributes:
        rootlists: シフト後の各変数の RootList
        shift: 適用したシフト (c_1, …, c_n). 根は λ_i + c_i に移っている
    """

    rootlists: tuple[RootList, ...]
    shift: tuple[Fraction, ...]

    @property
    def nvars(self) -> int:
        """変数の個数."""
        return len(self.rootlists)

    @cached_property
    def points(self) -> tuple[Point, ...]:
        """Λ の元. 各座標の根の昇順による直積順."""
        result: list[Point] = [()]
        for rootlist in self.rootlists:
            result = [(*p, value) for p in result for value in rootlist.values]
        return tuple(result)

    def multiplicity(self, point: Point) -> Monomial:
        """m(λ) = (m(λ_1), …, m(λ_n))."""
        return tuple(
            rootlist.multiplicity(value)
            for rootlist, value in zip(self.rootlists, point, strict=True)
        )

    def degrees(self) -> tuple[int, ...]:
        """(d_1, …, d_n)."""
        return tuple(rootlist.degree for rootlist in self.rootlists)

    def dimension(self) -> int:
        """d = d_1 … d_n."""
        return math.prod(self.degrees())

    def original_point(self, point: Point) -> Point:
        """シフト前の座標 λ - c."""
        return tuple(value - c for value, c in zip(point, self.shift, strict=True))

    def index_of(self, point: Point) -> int:
        """points 内での位置."""
        return self._positions[point]

    @cached_property
    def _positions(self) -> dict[Point, int]:
        return {point: k for k, point in enumerate(self.points)}
