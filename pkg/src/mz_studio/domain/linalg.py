"""有理数行列の厳密な線形代数.

行列は行のリスト（各行は Fraction の列）で表す。丸めは一切行わない。
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeAlias

from mz_studio.domain.errors import SingularMatrixError

Vector: TypeAlias = tuple[Fraction, ...]
Matrix: TypeAlias = list[list[Fraction]]


def _copy(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(
    rows: Sequence[Sequence[Fraction | int]], ncols: int | None = None
) -> tuple[Matrix, list[int]]:
    """簡約行階段形.

    ピボットは1に正規化し、零行は取り除く。

    Returns:
        (非零行, ピボット列の位置)
    """
    m = _copy(rows)
    width = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots: list[int] = []
    pivot_row = 0
    for col in range(width):
        found = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if found is None:
            continue
        m[pivot_row], m[found] = m[found], m[pivot_row]
        lead = m[pivot_row][col]
        m[pivot_row] = [x / lead for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[pivot_row], strict=True)]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row], pivots


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """階数."""
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[Vector]:
    """右零空間 {v : A v = 0} の基底.

    自由変数ごとに一本、その成分を1とした正規化基底を列番号順に返す。
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for row, p in zip(reduced, pivots, strict=True):
            vector[p] = -row[f]
        basis.append(tuple(vector))
    return basis


def determinant(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """行列式（ガウス消去）."""
    m = _copy(rows)
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        found = next((r for r in range(col, size) if m[r][col]), None)
        if found is None:
            return Fraction(0)
        if found != col:
            m[col], m[found] = m[found], m[col]
            det = -det
        lead = m[col][col]
        det *= lead
        for r in range(col + 1, size):
            if m[r][col]:
                factor = m[r][col] / lead
                m[r] = [a - factor * b for a, b in zip(m[r], m[col], strict=True)]
    return det


def inverse(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    """逆行列（ガウス・ジョルダン）.

    Raises:
        SingularMatrixError: 正則でない場合
    """
    size = len(rows)
    augmented = [
        [*row, *(Fraction(int(i == k)) for k in range(size))]
        for i, row in enumerate(_copy(rows))
    ]
    reduced, pivots = rref(augmented, size)
    if pivots != list(range(size)):
        raise SingularMatrixError(f"{size}x{size} matrix is singular")
    return [row[size:] for row in reduced]


def transpose(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """転置."""
    return [list(col) for col in zip(*rows, strict=True)]


def mat_vec(rows: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> Vector:
    """行列とベクトルの積."""
    return tuple(
        sum((a * b for a, b in zip(row, vector, strict=True)), start=Fraction(0))
        for row in rows
    )


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """内積."""
    return sum((x * y for x, y in zip(a, b, strict=True)), start=Fraction(0))


@dataclass(frozen=True)
class RowSpace:
    """行ベクトルの張る部分空間. 所属判定を繰り返し行うために RREF を保持する.

    Attributes:
        rows: 簡約行階段形の非零行
        pivots: ピボット列
        ncols: 列数
    """

    rows: tuple[Vector, ...]
    pivots: tuple[int, ...]
    ncols: int

    @classmethod
    def span(cls, vectors: Sequence[Sequence[Fraction]], ncols: int) -> RowSpace:
        """vectors の張る空間."""
        reduced, pivots = rref(vectors, ncols) if vectors else ([], [])
        return cls(tuple(tuple(r) for r in reduced), tuple(pivots), ncols)

    @property
    def dimension(self) -> int:
        """次元."""
        return len(self.rows)

    def residual(self, vector: Sequence[Fraction]) -> Vector:
        """ピボット成分を消去した残り. 零なら所属する."""
        result = [Fraction(x) for x in vector]
        for row, p in zip(self.rows, self.pivots, strict=True):
            if result[p]:
                factor = result[p]
                result = [a - factor * b for a, b in zip(result, row, strict=True)]
        return tuple(result)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        """所属判定."""
        return not any(self.residual(vector))


def solve(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vector | None:
    """Σ a_k columns[k] = target を満たす a を一つ返す. 解が無ければ None.

    自由変数は0とする。columns が一次独立なら解は一意。
    """
    count = len(columns)
    augmented = [
        [*(column[p] for column in columns), Fraction(target[p])] for p in range(len(target))
    ]
    reduced, pivots = rref(augmented, count + 1)
    if count in pivots:
        return None
    solution = [Fraction(0)] * count
    for row, p in zip(reduced, pivots, strict=True):
        solution[p] = row[count]
    return tuple(solution)
