"""例外定義.

CLIの終了コードは例外の系統で決まる。
    InputError              -> 2
    UnsupportedInputError   -> 3
    InternalConsistencyError -> 4
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from mz_studio.domain.polynomial import Polynomial


class MzStudioError(Exception):
    """MZ Studio の基底例外."""

    pass


class InputError(MzStudioError):
    """入力が不正な場合のエラー."""

    pass


class ParseError(InputError):
    """多項式文字列の構文エラー.

    Attributes:
        position: エラー位置（0始まりの文字オフセット）
        expected: その位置で期待されていたトークンの集合
    """

    def __init__(self, message: str, position: int, expected: Iterable[str]) -> None:
        self.position = position
        self.expected = frozenset(expected)
        detail = ", ".join(sorted(self.expected))
        super().__init__(f"{message} (position {position}; expected one of: {detail})")


class ProblemFileError(InputError):
    """問題ファイルの内容が不正."""

    pass


class InfiniteCodimensionError(InputError):
    """イデアルの余次元が有限でない.

    Attributes:
        indices: 先頭単項式に純冪が現れない変数の番号（0始まり）
    """

    def __init__(self, indices: Iterable[int]) -> None:
        self.indices = tuple(indices)
        super().__init__(
            f"no pure power of variable(s) {list(self.indices)} among the leading terms"
        )


class InvalidShiftError(InputError):
    """指定された座標シフトで根が0になる."""

    pass


class VariableCountError(InputError):
    """変数の個数が一致しない."""

    pass


class ConfigurationError(InputError):
    """設定値（環境変数など）が不正."""

    pass


class UnsupportedInputError(MzStudioError):
    """入力は正しいが、実装の範囲外で判定できない."""

    pass


class NonSplittingError(UnsupportedInputError):
    """消去多項式が有理数体上で一次式に分解しない.

    Attributes:
        factor: 一次式に分解しなかった無平方因子
        index: 変数番号
    """

    def __init__(self, factor: Polynomial, index: int, text: str) -> None:
        self.factor = factor
        self.index = index
        super().__init__(f"eliminant does not split over the rationals: {text}")


class SubsetBudgetExceeded(UnsupportedInputError):
    """部分集合の列挙数が上限を超える.

    Attributes:
        size: 列挙対象の集合の大きさ
        cap: 設定された上限
    """

    def __init__(self, size: int, cap: int) -> None:
        self.size = size
        self.cap = cap
        super().__init__(f"refusing to enumerate 2^{size} subsets (cap is {cap})")


class InternalConsistencyError(MzStudioError):
    """内部整合性の破綻. 正しい入力で発生してはならない."""

    pass


class SingularMatrixError(InternalConsistencyError):
    """正則であるべき行列が特異."""

    pass


class IdempotentFamilyError(InternalConsistencyError):
    """構成した冪等元族が条件を満たさない."""

    pass


class FunctionalConsistencyError(InternalConsistencyError):
    """汎関数の二通りの評価が一致しない."""

    pass


class OracleDisagreementError(InternalConsistencyError):
    """判定パイプラインとオラクルの結果が一致しない."""

    pass
