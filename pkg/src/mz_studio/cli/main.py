"""コマンドラインのエントリーポイント.

使用方法:
    mz decide problem.json [--oracle] [--subset-cap N] [--format json|text]
    mz gb problem.json
    mz idempotents problem.json
    mz oracle problem.json

終了コード:
    0  MZ 空間である / 成功
    1  MZ 空間でない
    2  入力エラー
    3  判定できない入力（有理数体上で分解しない、部分集合の上限超過）
    4  内部整合性エラー
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from mz_studio.application.groebner import (
    INFINITE,
    build_quotient,
    eliminant_basis,
    quotient_dimension,
)
from mz_studio.application.mzdecide import decide
from mz_studio.application.oracle import (
    OracleResult,
    brute_force_decide,
    confirm_with_oracle,
    multiplication_table,
    run_oracle,
)
from mz_studio.application.pipeline import (
    DecisionOptions,
    DecisionServices,
    prepare_problem,
)
from mz_studio.domain.errors import (
    InfiniteCodimensionError,
    InputError,
    MzStudioError,
    NonSplittingError,
    OracleDisagreementError,
    UnsupportedInputError,
)
from mz_studio.infrastructure.polynomial_parser import format_polynomial
from mz_studio.infrastructure.problem_file import ProblemFile
from mz_studio.infrastructure.report import (
    VerdictReport,
    dump_json,
    groebner_report,
    idempotents_report,
    oracle_report,
    render_text,
)
from mz_studio.infrastructure.services import create_services
from mz_studio.infrastructure.settings import (
    ENGINES,
    LOG_LEVELS,
    DecisionSettings,
    parse_order,
)

logger = logging.getLogger(__name__)

EXIT_MZ = 0
EXIT_NOT_MZ = 1
EXIT_INPUT_ERROR = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL_ERROR = 4


@dataclass(frozen=True)
class Invocation:
    """設定を解決した後の実行内容.

    Attributes:
        problem_file: 読み込んだ問題ファイル
        settings: CLI > ファイル > 環境変数 > 既定値 の順に解決した設定
        options: パイプラインに渡すオプション
        run_oracle: オラクルとの照合を行うか
    """

    problem_file: ProblemFile
    settings: DecisionSettings
    options: DecisionOptions
    run_oracle: bool

    @property
    def variables(self) -> list[str]:
        return list(self.problem_file.variables)


def build_parser() -> argparse.ArgumentParser:
    """引数パーサーを作る."""
    parser = argparse.ArgumentParser(
        prog="mz", description="Decide whether I + span(v_1, ..., v_h) is a Mathieu-Zhao space."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", type=Path, help="problem file (JSON)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--engine", choices=ENGINES, default=None)
    common.add_argument("--order", default=None, help="monomial order: grevlex or lex")
    common.add_argument("--log-level", choices=LOG_LEVELS, default=None)
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )

    decide_parser = subparsers.add_parser(
        "decide", parents=[common], help="run the full decision pipeline"
    )
    decide_parser.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    decide_parser.add_argument("--subset-cap", type=int, default=None)
    decide_parser.add_argument("--timings", action="store_true", help="report elapsed seconds")
    decide_parser.add_argument(
        "--cross-check", action="store_true", help="also evaluate L_i(g_λ) directly"
    )

    subparsers.add_parser("gb", parents=[common], help="reduced Groebner basis and dimension")
    subparsers.add_parser("idempotents", parents=[common], help="points, shift and g_λ")
    oracle_parser = subparsers.add_parser(
        "oracle", parents=[common], help="brute-force verdict over all subsets"
    )
    oracle_parser.add_argument("--subset-cap", type=int, default=None)
    return parser


def _log_level(args: argparse.Namespace, settings: DecisionSettings) -> str:
    if args.log_level:
        return str(args.log_level)
    if args.verbose >= 2:
        return "DEBUG"
    if args.verbose == 1:
        return "INFO"
    return settings.log_level


def resolve(args: argparse.Namespace, env: DecisionSettings) -> Invocation:
    """問題ファイルを読み、設定の優先順位を解決する.

    Raises:
        ProblemFileError: 問題ファイルが不正な場合
        ConfigurationError: 設定値が不正な場合
    """
    problem_file = ProblemFile.load(args.file)
    file_options = problem_file.options
    cap = getattr(args, "subset_cap", None)
    if cap is None:
        cap = file_options.subset_cap if file_options.subset_cap is not None else env.subset_cap
    order = parse_order(args.order) if args.order else file_options.order or env.monomial_order
    settings = DecisionSettings(
        subset_cap=cap,
        groebner_engine=args.engine or file_options.engine or env.groebner_engine,
        monomial_order=order,
        log_level=_log_level(args, env),
    )
    options = DecisionOptions(
        subset_cap=settings.subset_cap,
        shift_override=file_options.shift_override,
        order=settings.monomial_order,
        cross_check=getattr(args, "cross_check", False),
    )
    run = bool(getattr(args, "oracle", False)) or file_options.run_oracle
    return Invocation(problem_file, settings, options, run)


def _emit(data: dict[str, Any], output_format: str) -> None:
    print(dump_json(data) if output_format == "json" else render_text(data))


def run_decide(
    invocation: Invocation, services: DecisionServices, args: argparse.Namespace
) -> int:
    """decide サブコマンド."""
    problem = invocation.problem_file.to_problem()
    started = time.perf_counter()
    verdict = decide(problem, services, invocation.options)
    timings: dict[str, float] = {"decide": round(time.perf_counter() - started, 6)}

    oracle_result: OracleResult | None = None
    if invocation.run_oracle:
        started = time.perf_counter()
        oracle_result = run_oracle(problem, services, invocation.options)
        timings["oracle"] = round(time.perf_counter() - started, 6)
        try:
            confirm_with_oracle(verdict, oracle_result)
        except OracleDisagreementError:
            dump = {
                "verdict": VerdictReport.from_verdict(verdict, invocation.variables).to_dict(),
                "oracle": oracle_report(
                    oracle_result, verdict.spectrum, invocation.variables
                ),
            }
            print(dump_json(dump), file=sys.stderr)
            raise
        logger.info("oracle agrees after %d subset(s)", oracle_result.subsets_checked)

    report = VerdictReport.from_verdict(
        verdict,
        invocation.variables,
        oracle=oracle_result,
        timings=timings if args.timings else None,
    )
    _emit(report.to_dict(), args.format)
    return EXIT_MZ if verdict.is_mz else EXIT_NOT_MZ


def run_gb(invocation: Invocation, services: DecisionServices, args: argparse.Namespace) -> int:
    """gb サブコマンド."""
    problem = invocation.problem_file.to_problem()
    order = invocation.options.order
    if problem.generators:
        basis = services.engine.compute(problem.generators, order)
    else:
        basis = eliminant_basis(problem.eliminants, order)
    quotient = None if quotient_dimension(basis) == INFINITE else build_quotient(basis)
    _emit(groebner_report(basis, quotient, invocation.variables), args.format)
    return EXIT_MZ


def run_idempotents(
    invocation: Invocation, services: DecisionServices, args: argparse.Namespace
) -> int:
    """idempotents サブコマンド."""
    problem = invocation.problem_file.to_problem()
    prepared = prepare_problem(problem, services, invocation.options)
    _emit(idempotents_report(prepared.family, invocation.variables), args.format)
    return EXIT_MZ


def run_oracle_command(
    invocation: Invocation, services: DecisionServices, args: argparse.Namespace
) -> int:
    """oracle サブコマンド."""
    problem = invocation.problem_file.to_problem()
    prepared = prepare_problem(problem, services, invocation.options)
    table = multiplication_table(prepared.quotient)
    result = brute_force_decide(
        prepared.family, prepared.vbasis, table, invocation.options.subset_cap
    )
    _emit(oracle_report(result, prepared.spectrum, invocation.variables), args.format)
    return EXIT_MZ if result.is_mz else EXIT_NOT_MZ


COMMANDS = {
    "decide": run_decide,
    "gb": run_gb,
    "idempotents": run_idempotents,
    "oracle": run_oracle_command,
}


def exit_code_for(error: MzStudioError) -> int:
    """例外の系統から終了コードを決める."""
    if isinstance(error, InputError):
        return EXIT_INPUT_ERROR
    if isinstance(error, UnsupportedInputError):
        return EXIT_UNSUPPORTED
    return EXIT_INTERNAL_ERROR


def describe(error: MzStudioError, variables: Sequence[str] | None) -> str:
    """標準エラーに出すメッセージ. 因子や変数番号はユーザーの変数名で書き直す."""
    if isinstance(error, NonSplittingError) and variables:
        factor = format_polynomial(error.factor, list(variables))
        return f"eliminant does not split over the rationals: {factor}"
    if isinstance(error, InfiniteCodimensionError) and variables:
        names = ", ".join(variables[i] for i in error.indices)
        return f"no pure power of {names} among the leading terms; the codimension is infinite"
    return str(error)


def main(argv: Sequence[str] | None = None) -> int:
    """CLI を実行する.

    Returns:
        終了コード
    """
    args = build_parser().parse_args(argv)
    variables: Sequence[str] | None = None
    try:
        env = DecisionSettings.from_env()
        invocation = resolve(args, env)
        variables = invocation.variables
        logging.basicConfig(
            stream=sys.stderr,
            level=invocation.settings.logging_level,
            format="%(levelname)s %(name)s: %(message)s",
            force=True,
        )
        services = create_services(invocation.settings)
        return COMMANDS[args.command](invocation, services, args)
    except MzStudioError as e:
        print(f"Error: {describe(e, variables)}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
