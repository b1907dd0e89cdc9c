"""共通フィクスチャ."""

from __future__ import annotations

import pytest

from mz_studio.application.pipeline import DecisionServices
from mz_studio.infrastructure.buchberger_engine import BuchbergerEngine
from mz_studio.infrastructure.rational_root_finder import RationalRootFinder
from mz_studio.infrastructure.sympy_engine import SympyGroebnerEngine


@pytest.fixture
def services() -> DecisionServices:
    """Buchberger エンジンを使うサービス."""
    return DecisionServices(engine=BuchbergerEngine(), root_finder=RationalRootFinder())


@pytest.fixture(params=["buchberger", "sympy"])
def any_services(request: pytest.FixtureRequest) -> DecisionServices:
    """両方のエンジンで同じテストを走らせる."""
    engine = BuchbergerEngine() if request.param == "buchberger" else SympyGroebnerEngine()
    return DecisionServices(engine=engine, root_finder=RationalRootFinder())

