"""根の分解のインターフェース."""

from typing import Protocol

from mz_studio.domain.polynomial import Polynomial
from mz_studio.domain.spectrum import RootList


class RootFinder(Protocol):
    """消去多項式を一次因子に分解するインターフェース.

    実装の係数体で分解しない入力は NonSplittingError とする。
    数体上の実装を追加する場合はここが差し替え箇所になる。
    """

    def find_roots(self, eliminant: Polynomial, index: int) -> RootList:
        """f_i(x_i) の根と重複度を求める.

        Args:
            eliminant: x_index のモニックな一変数多項式（次数1以上）
            index: 変数番号

        Returns:
            根の昇順の RootList

        Raises:
            NonSplittingError: 一次式の積に分解しない場合
        """
        ...
