"""コマンドラインのテスト."""

from __future__ import annotations

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from mz_studio.cli.main import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_MZ,
    EXIT_NOT_MZ,
    EXIT_UNSUPPORTED,
    exit_code_for,
    main,
)
from mz_studio.domain.errors import (
    IdempotentFamilyError,
    MzStudioError,
    ParseError,
    SubsetBudgetExceeded,
)
from mz_studio.domain.polynomial import Polynomial
from mz_studio.infrastructure.polynomial_parser import parse_polynomial

ProblemWriter = Callable[..., Path]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """MZ_* の環境変数を無視する."""
    for key in ("MZ_SUBSET_CAP", "MZ_GROEBNER_ENGINE", "MZ_MONOMIAL_ORDER", "MZ_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def write_problem(tmp_path: Path) -> ProblemWriter:
    """問題ファイルを書き出す."""

    def write(ideal: Any, vectors: list[str] | None = None, **extra: Any) -> Path:
        data: dict[str, Any] = {"variables": extra.pop("variables", ["x1"]), "ideal": ideal}
        if vectors is not None:
            data["vectors"] = vectors
        data.update(extra)
        path = tmp_path / "problem.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, Any, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    try:
        output = json.loads(captured.out)
    except json.JSONDecodeError:
        output = captured.out
    return code, output, captured.err


SIMPLE = ["(x1-1)*(x1-2)"]


class TestDecide:
    """decide サブコマンド."""

    def test_mz(self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]) -> None:
        code, output, _ = _run(capsys, "decide", str(write_problem(SIMPLE, ["3 - 2*x1"])))
        assert code == EXIT_MZ
        assert output["is_mz"] is True
        assert output["certificate"]["kind"] == "mz"

    def test_ideal_alone(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, output, _ = _run(capsys, "decide", str(write_problem(SIMPLE, [])))
        assert code == EXIT_MZ
        assert output["lambda0"] == []
        assert output["certificate"] == {"kind": "mz", "subsets_checked": 3, "triples_checked": 0}

    def test_not_mz(self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]) -> None:
        code, output, _ = _run(capsys, "decide", str(write_problem(SIMPLE, ["1"])))
        assert code == EXIT_NOT_MZ
        assert output["certificate"]["subset"] == [["1"], ["2"]]

    def test_non_splitting(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, _, err = _run(capsys, "decide", str(write_problem(["x1^2 + 1"])))
        assert code == EXIT_UNSUPPORTED
        assert "x1^2 + 1" in err
        assert err.startswith("Error:")

    def test_oracle_and_timings(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(["(x1-1)^2"], ["1"])
        code, output, _ = _run(capsys, "decide", str(path), "--oracle", "--timings")
        assert code == EXIT_NOT_MZ
        assert output["oracle"]["is_mz"] is False
        assert output["oracle"]["witness_subset"] == [["1"]]
        assert set(output["timings"]) == {"decide", "oracle"}

    def test_oracle_from_file_options(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(SIMPLE, ["1"], options={"run_oracle": True})
        _, output, _ = _run(capsys, "decide", str(path))
        assert "oracle" in output

    def test_output_is_byte_identical(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = str(write_problem(["x^2 - 1", "y^2 - y"], ["x*y"], variables=["x", "y"]))
        main(["decide", path])
        first = capsys.readouterr().out
        main(["decide", path, "--engine", "sympy"])
        second = capsys.readouterr().out
        assert first == second

    def test_subset_cap_from_command_line(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(SIMPLE, options={"subset_cap": 10})
        code, _, err = _run(capsys, "decide", str(path), "--subset-cap", "1")
        assert code == EXIT_UNSUPPORTED
        assert "cap is 1" in err

    def test_subset_cap_from_environment(
        self,
        write_problem: ProblemWriter,
        capsys: pytest.CaptureFixture[str],
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        monkeypatch.setenv("MZ_SUBSET_CAP", "1")
        code, _, _ = _run(capsys, "decide", str(write_problem(SIMPLE)))
        assert code == EXIT_UNSUPPORTED

    def test_shift_override(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(["x1*(x1-1)"], ["1"], options={"shift_override": [5]})
        code, output, _ = _run(capsys, "decide", str(path))
        assert code == EXIT_NOT_MZ
        assert output["shift"] == ["5"]
        assert output["spectrum"][0]["shifted"] == ["5"]

    def test_text_format(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, output, _ = _run(
            capsys, "decide", str(write_problem(SIMPLE, ["3 - 2*x1"])), "--format", "text"
        )
        assert code == EXIT_MZ
        assert "is_mz: yes" in output.splitlines()


class TestInputErrors:
    """入力エラーの終了コード."""

    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "decide", str(tmp_path / "missing.json"))
        assert code == EXIT_INPUT_ERROR
        assert "missing.json" in err

    def test_invalid_json(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        code, _, _ = _run(capsys, "decide", str(path))
        assert code == EXIT_INPUT_ERROR

    def test_syntax_error(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, _, err = _run(capsys, "decide", str(write_problem(SIMPLE, ["x1 x1"])))
        assert code == EXIT_INPUT_ERROR
        assert "vectors[0]" in err

    def test_infinite_codimension(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(["x1"], variables=["x1", "x2"])
        code, _, err = _run(capsys, "decide", str(path))
        assert code == EXIT_INPUT_ERROR
        assert "no pure power of x2" in err
        assert "[1]" not in err

    def test_unknown_order(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, _, _ = _run(capsys, "decide", str(write_problem(SIMPLE)), "--order", "deglex")
        assert code == EXIT_INPUT_ERROR

    @pytest.mark.parametrize(
        ("error", "expected"),
        [
            (ParseError("bad", 0, ["x"]), EXIT_INPUT_ERROR),
            (SubsetBudgetExceeded(30, 20), EXIT_UNSUPPORTED),
            (IdempotentFamilyError("broken"), EXIT_INTERNAL_ERROR),
        ],
    )
    def test_exit_codes(self, error: MzStudioError, expected: int) -> None:
        assert exit_code_for(error) == expected


class TestOtherCommands:
    """gb / idempotents / oracle サブコマンド."""

    def test_gb(self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]) -> None:
        path = write_problem(["x1^2 - 1", "x2"], variables=["x1", "x2"])
        code, output, _ = _run(capsys, "gb", str(path))
        assert code == EXIT_MZ
        assert output["groebner_basis"] == ["x1^2 - 1", "x2"]
        assert output["dimension"] == 2
        assert output["staircase"] == [[0, 0], [1, 0]]
        assert output["order"] == "grevlex"

    def test_gb_from_eliminants(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem({"eliminants": ["x1^2", "x2 - 3"]}, variables=["x1", "x2"])
        code, output, _ = _run(capsys, "gb", str(path), "--order", "lex")
        assert code == EXIT_MZ
        assert output["dimension"] == 2
        assert output["order"] == "lex"

    def test_gb_of_infinite_codimension(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = write_problem(["x1"], variables=["x1", "x2"])
        code, output, _ = _run(capsys, "gb", str(path))
        assert code == EXIT_MZ
        assert output["groebner_basis"] == ["x1"]
        assert output["dimension"] == "INFINITE"
        assert output["staircase"] is None

    def test_idempotents(
        self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]
    ) -> None:
        code, output, _ = _run(capsys, "idempotents", str(write_problem(SIMPLE)))
        assert code == EXIT_MZ
        x1 = Polynomial.variable(0, 1)
        elements = {tuple(e["point"]): e["g"] for e in output["idempotents"]}
        assert parse_polynomial(elements[("1",)], ["x1"]) == 2 - x1
        assert parse_polynomial(elements[("2",)], ["x1"]) == x1 - 1

    def test_oracle(self, write_problem: ProblemWriter, capsys: pytest.CaptureFixture[str]) -> None:
        code, output, _ = _run(capsys, "oracle", str(write_problem(SIMPLE, ["1"])))
        assert code == EXIT_NOT_MZ
        assert output["witness_subset"] == [["1"], ["2"]]
        assert output["variables"] == ["x1"]
