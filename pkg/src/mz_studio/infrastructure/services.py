"""設定に応じた実装の組み立て."""

from __future__ import annotations

from mz_studio.application.groebner import GroebnerEngine
from mz_studio.application.pipeline import DecisionServices
from mz_studio.domain.errors import ConfigurationError
from mz_studio.infrastructure.buchberger_engine import BuchbergerEngine
from mz_studio.infrastructure.rational_root_finder import RationalRootFinder
from mz_studio.infrastructure.settings import DecisionSettings
from mz_studio.infrastructure.sympy_engine import SympyGroebnerEngine


def create_engine(name: str) -> GroebnerEngine:
    """名前からグレブナー基底エンジンを作る.

    Raises:
        ConfigurationError: 未知の名前の場合
    """
    if name == "buchberger":
        return BuchbergerEngine()
    if name == "sympy":
        return SympyGroebnerEngine()
    raise ConfigurationError(f"unknown groebner engine {name!r}")


def create_services(settings: DecisionSettings | None = None) -> DecisionServices:
    """設定に従って DecisionServices を作る."""
    settings = settings or DecisionSettings()
    return DecisionServices(
        engine=create_engine(settings.groebner_engine),
        root_finder=RationalRootFinder(),
    )
