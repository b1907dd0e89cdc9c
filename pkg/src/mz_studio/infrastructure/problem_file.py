"""問題ファイル（JSON）の読み書き.

例:
    {
      "variables": ["x1"],
      "ideal": ["(x1-1)*(x1-2)"],
      "vectors": ["1"],
      "options": {"subset_cap": 20, "run_oracle": false}
    }

"ideal" は生成元のリスト、または {"generators": [...]} / {"eliminants": [...]}。
有理数は精度を落とさないよう "p/q" 形式の文字列でも書ける。
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from mz_studio.application.pipeline import DecisionProblem
from mz_studio.domain.errors import ConfigurationError, ParseError, ProblemFileError
from mz_studio.domain.ideal import MonomialOrder
from mz_studio.domain.polynomial import Polynomial
from mz_studio.infrastructure.polynomial_parser import IDENTIFIER, parse_polynomial
from mz_studio.infrastructure.settings import ENGINES, parse_order


@dataclass(frozen=True)
class ProblemOptions:
    """問題ファイルの options. 未指定の項目は None（設定の値を使う）.

    Attributes:
        subset_cap: 部分集合の列挙上限
        run_oracle: オラクルとの照合を行うか
        shift_override: 座標シフトの指定
        order: 単項式順序
        engine: グレブナー基底エンジン
    """

    subset_cap: int | None = None
    run_oracle: bool = False
    shift_override: tuple[Fraction, ...] | None = None
    order: MonomialOrder | None = None
    engine: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """JSON に書き出す辞書（未指定の項目は省く）."""
        data: dict[str, Any] = {"run_oracle": self.run_oracle}
        if self.subset_cap is not None:
            data["subset_cap"] = self.subset_cap
        if self.shift_override is not None:
            data["shift_override"] = [str(c) for c in self.shift_override]
        if self.order is not None:
            data["order"] = self.order.value
        if self.engine is not None:
            data["engine"] = self.engine
        return data

    @classmethod
    def from_dict(cls, data: Any) -> ProblemOptions:
        """辞書から生成する.

        Raises:
            ProblemFileError: 値の型や範囲が不正な場合
        """
        if data is None:
            return cls()
        if not isinstance(data, dict):
            raise ProblemFileError("options must be an object")
        unknown = set(data) - {"subset_cap", "run_oracle", "shift_override", "order", "engine"}
        if unknown:
            raise ProblemFileError(f"unknown option(s): {', '.join(sorted(unknown))}")
        cap = data.get("subset_cap")
        if cap is not None and (not isinstance(cap, int) or isinstance(cap, bool) or cap < 0):
            raise ProblemFileError(f"subset_cap must be a natural number, got {cap!r}")
        run_oracle = data.get("run_oracle", False)
        if not isinstance(run_oracle, bool):
            raise ProblemFileError(f"run_oracle must be a boolean, got {run_oracle!r}")
        shift = data.get("shift_override")
        if shift is not None:
            if not isinstance(shift, list):
                raise ProblemFileError("shift_override must be a list")
            shift = tuple(parse_rational(c, "shift_override") for c in shift)
        engine = data.get("engine")
        if engine is not None and engine not in ENGINES:
            raise ProblemFileError(f"unknown engine {engine!r}; use one of {ENGINES}")
        order = data.get("order")
        try:
            parsed_order = parse_order(order) if order is not None else None
        except ConfigurationError as e:
            raise ProblemFileError(str(e)) from e
        return cls(
            subset_cap=cap,
            run_oracle=run_oracle,
            shift_override=shift,
            order=parsed_order,
            engine=engine,
        )


def parse_rational(value: Any, where: str) -> Fraction:
    """整数または "p/q" 文字列を Fraction にする."""
    if isinstance(value, bool) or not isinstance(value, int | str):
        raise ProblemFileError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ProblemFileError(f"{where}: {value!r} is not a rational number") from e


def _string_list(data: Any, where: str) -> tuple[str, ...]:
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise ProblemFileError(f"{where} must be a list of strings")
    return tuple(data)


@dataclass(frozen=True)
class ProblemFile:
    """判定問題の記述.

    Attributes:
        variables: 変数名（重複なし、識別子の文法に従う）
        generators: I の生成元（文字列）
        eliminants: f_1(x_1), …, f_n(x_n)（文字列）. generators とどちらか一方
        vectors: v_1, …, v_h（文字列）
        options: オプション
    """

    variables: tuple[str, ...]
    generators: tuple[str, ...] = ()
    eliminants: tuple[str, ...] = ()
    vectors: tuple[str, ...] = ()
    options: ProblemOptions = field(default_factory=ProblemOptions)

    def __post_init__(self) -> None:
        if not self.variables:
            raise ProblemFileError("at least one variable is required")
        if len(set(self.variables)) != len(self.variables):
            raise ProblemFileError(f"variable names are not distinct: {list(self.variables)}")
        for name in self.variables:
            if not IDENTIFIER.match(name):
                raise ProblemFileError(f"{name!r} is not a valid variable name")
        if bool(self.generators) == bool(self.eliminants):
            raise ProblemFileError("give the ideal either by generators or by eliminants")

    def to_json(self) -> str:
        """JSON文字列に変換."""
        ideal: Any = (
            list(self.generators) if self.generators else {"eliminants": list(self.eliminants)}
        )
        return json.dumps(
            {
                "variables": list(self.variables),
                "ideal": ideal,
                "vectors": list(self.vectors),
                "options": self.options.to_dict(),
            },
            indent=2,
            sort_keys=True,
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, json_str: str) -> ProblemFile:
        """JSON文字列からインスタンス生成.

        Raises:
            ProblemFileError: JSON として読めない、または内容が不正な場合
        """
        try:
            data = json.loads(json_str)
        except json.JSONDecodeError as e:
            raise ProblemFileError(f"invalid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ProblemFileError("a problem file must be a JSON object")
        unknown = set(data) - {"variables", "ideal", "vectors", "options"}
        if unknown:
            raise ProblemFileError(f"unknown key(s): {', '.join(sorted(unknown))}")
        if "variables" not in data or "ideal" not in data:
            raise ProblemFileError("'variables' and 'ideal' are required")
        ideal = data["ideal"]
        generators: tuple[str, ...] = ()
        eliminants: tuple[str, ...] = ()
        if isinstance(ideal, list):
            generators = _string_list(ideal, "ideal")
        elif isinstance(ideal, dict) and set(ideal) == {"generators"}:
            generators = _string_list(ideal["generators"], "ideal.generators")
        elif isinstance(ideal, dict) and set(ideal) == {"eliminants"}:
            eliminants = _string_list(ideal["eliminants"], "ideal.eliminants")
        else:
            raise ProblemFileError(
                "'ideal' must be a list of generators, {\"generators\": [...]} "
                "or {\"eliminants\": [...]}"
            )
        return cls(
            variables=_string_list(data["variables"], "variables"),
            generators=generators,
            eliminants=eliminants,
            vectors=_string_list(data.get("vectors", []), "vectors"),
            options=ProblemOptions.from_dict(data.get("options")),
        )

    @classmethod
    def load(cls, path: Path) -> ProblemFile:
        """ファイルから読み込む."""
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ProblemFileError(f"cannot read {path}: {e}") from e
        return cls.from_json(text)

    def to_problem(self) -> DecisionProblem:
        """多項式を解析して DecisionProblem にする.

        Raises:
            ProblemFileError: 多項式の構文エラー（どの項目かを含む）
        """
        variables = list(self.variables)

        def parse_all(sources: tuple[str, ...], where: str) -> tuple[Polynomial, ...]:
            parsed: list[Polynomial] = []
            for k, source in enumerate(sources):
                try:
                    parsed.append(parse_polynomial(source, variables))
                except ParseError as e:
                    raise ProblemFileError(f"{where}[{k}] {source!r}: {e}") from e
            return tuple(parsed)

        return DecisionProblem(
            nvars=len(variables),
            generators=parse_all(self.generators, "ideal"),
            eliminants=parse_all(self.eliminants, "eliminants"),
            vectors=parse_all(self.vectors, "vectors"),
        )
