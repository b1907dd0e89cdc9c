"""判定の設定.

環境変数（.env を含む）から既定値を読み込む。優先順位は
CLI 引数 > 問題ファイルの options > 環境変数 > 既定値。
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

from mz_studio.domain.errors import ConfigurationError
from mz_studio.domain.ideal import MonomialOrder

ENGINES = ("buchberger", "sympy")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class DecisionSettings:
    """判定の設定値.

    Attributes:
        subset_cap: 部分集合の列挙を許す集合の大きさの上限
        groebner_engine: グレブナー基底の計算エンジン（buchberger / sympy）
        monomial_order: 単項式順序
        log_level: ログレベル
    """

    ENV_SUBSET_CAP = "MZ_SUBSET_CAP"
    ENV_GROEBNER_ENGINE = "MZ_GROEBNER_ENGINE"
    ENV_MONOMIAL_ORDER = "MZ_MONOMIAL_ORDER"
    ENV_LOG_LEVEL = "MZ_LOG_LEVEL"

    subset_cap: int = 20
    groebner_engine: str = "buchberger"
    monomial_order: MonomialOrder = MonomialOrder.GREVLEX
    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if self.subset_cap < 0:
            raise ConfigurationError(f"subset cap must be non-negative, got {self.subset_cap}")
        if self.groebner_engine not in ENGINES:
            raise ConfigurationError(
                f"unknown groebner engine {self.groebner_engine!r}; use one of {ENGINES}"
            )
        if self.log_level not in LOG_LEVELS:
            raise ConfigurationError(
                f"unknown log level {self.log_level!r}; use one of {LOG_LEVELS}"
            )

    @classmethod
    def from_env(cls) -> DecisionSettings:
        """環境変数から設定を作る. 未設定の項目は既定値."""
        load_dotenv()
        settings = cls()
        cap = os.environ.get(cls.ENV_SUBSET_CAP)
        if cap:
            settings = settings.with_subset_cap(_parse_int(cls.ENV_SUBSET_CAP, cap))
        engine = os.environ.get(cls.ENV_GROEBNER_ENGINE)
        if engine:
            settings = replace(settings, groebner_engine=engine.strip().lower())
        order = os.environ.get(cls.ENV_MONOMIAL_ORDER)
        if order:
            settings = replace(settings, monomial_order=parse_order(order))
        level = os.environ.get(cls.ENV_LOG_LEVEL)
        if level:
            settings = replace(settings, log_level=level.strip().upper())
        return settings

    def with_subset_cap(self, cap: int) -> DecisionSettings:
        """subset_cap を差し替えた設定."""
        return replace(self, subset_cap=cap)

    @property
    def logging_level(self) -> int:
        """logging モジュールのレベル値."""
        return logging.getLevelNamesMapping()[self.log_level]


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as e:
        raise ConfigurationError(f"{key} must be an integer, got {value!r}") from e


def parse_order(value: str) -> MonomialOrder:
    """単項式順序の名前を解釈する.

    Raises:
        ConfigurationError: 未知の名前の場合
    """
    try:
        return MonomialOrder(value.strip().lower())
    except ValueError as e:
        names = [o.value for o in MonomialOrder]
        raise ConfigurationError(f"unknown monomial order {value!r}; use one of {names}") from e
