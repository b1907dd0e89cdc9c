"""レポート出力のテスト."""

from __future__ import annotations

import json

import pytest

from mz_studio.application.mzdecide import decide
from mz_studio.application.oracle import run_oracle
from mz_studio.application.pipeline import DecisionServices
from mz_studio.domain.errors import ProblemFileError
from mz_studio.infrastructure.report import VerdictReport, dump_json, render_text
from tests.strategies import problem

SIMPLE = ["(t-1)*(t-2)"]


class TestVerdictReport:
    """VerdictReport."""

    def test_condition_i_certificate(self, services: DecisionServices) -> None:
        verdict = decide(problem(SIMPLE, ["1"]), services)
        data = VerdictReport.from_verdict(verdict, ["t"]).to_dict()
        assert data["is_mz"] is False
        assert data["certificate"] == {
            "kind": "condition_i",
            "subset": [["1"], ["2"]],
            "sums": ["0"],
        }
        assert data["conditions"]["i"] == {"passed": False, "checked": 3}
        assert "timings" not in data
        assert "oracle" not in data

    def test_condition_ii_certificate(self, services: DecisionServices) -> None:
        verdict = decide(problem(["(t-1)^2"], ["1"]), services)
        certificate = VerdictReport.from_verdict(verdict, ["t"]).to_dict()["certificate"]
        assert certificate == {
            "kind": "condition_ii",
            "point": ["1"],
            "monomial": [1],
            "monomial_text": "t",
            "functional_index": 0,
            "value": "1",
        }

    def test_points_in_user_coordinates(self, services: DecisionServices) -> None:
        verdict = decide(problem(["t*(t-1)"], ["t - 1"]), services)
        data = VerdictReport.from_verdict(verdict, ["t"]).to_dict()
        assert data["shift"] == ["1"]
        assert data["spectrum"][0] == {"point": ["0"], "shifted": ["1"], "multiplicity": [1]}
        assert data["groebner_basis"] == ["t^2 - t"]
        assert data["eliminants"] == ["t^2 - t"]

    def test_json_is_read_back(self, services: DecisionServices) -> None:
        decision = problem(["(t-1)^2"], ["1"])
        verdict = decide(decision, services)
        report = VerdictReport.from_verdict(
            verdict,
            ["t"],
            oracle=run_oracle(decision, services),
            timings={"decide": 0.5},
        )
        assert VerdictReport.from_json(report.to_json()) == report

    def test_output_is_deterministic(self, services: DecisionServices) -> None:
        decision = problem(["x^2 - 1", "y^2 - y"], ["x*y", "1"], variables=("x", "y"))
        first = VerdictReport.from_verdict(decide(decision, services), ["x", "y"]).to_json()
        second = VerdictReport.from_verdict(decide(decision, services), ["x", "y"]).to_json()
        assert first == second
        assert list(json.loads(first)) == sorted(json.loads(first))

    def test_not_a_report(self) -> None:
        with pytest.raises(ProblemFileError):
            VerdictReport.from_json('{"is_mz": true}')


class TestRenderText:
    """テキスト表示."""

    def test_nested(self) -> None:
        text = render_text({"b": {"c": None}, "a": True, "d": [["1", "2"]]})
        assert text.splitlines() == ["a: yes", "b:", "  c: -", "d: [[1, 2]]"]

    def test_list_of_objects(self) -> None:
        text = render_text({"items": [{"x": 1}, {"x": 2}]})
        assert text.splitlines() == ["items:", "  - x: 1", "  - x: 2"]

    def test_dump_json_sorts_keys(self) -> None:
        assert dump_json({"b": 1, "a": 2}).index('"a"') < dump_json({"b": 1, "a": 2}).index('"b"')
