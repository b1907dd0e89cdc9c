"""判定結果のレポート（JSON / テキスト）.

有理数は "p/q" 形式の文字列、単項式は指数ベクトル、多項式は正準表示の文字列で書く。
キーは整列し、時間計測は明示的に渡した場合だけ含めるので出力は実行ごとに同一になる。
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from mz_studio.application.oracle import OracleResult
from mz_studio.domain.errors import ProblemFileError
from mz_studio.domain.ideal import GroebnerBasis, QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.polynomial import Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum
from mz_studio.domain.verdict import ConditionIFailure, ConditionIIFailure, Verdict
from mz_studio.infrastructure.polynomial_parser import format_polynomial


def _rational(value: Fraction) -> str:
    return str(value)


def _point(values: Sequence[Fraction]) -> list[str]:
    return [str(v) for v in values]


def _read_point(data: Any) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in data)


@dataclass(frozen=True)
class PointReport:
    """Λ の一点.

    Attributes:
        point: ユーザー座標での λ - c
        shifted: シフト後の座標 λ
        multiplicity: m(λ)
    """

    point: tuple[Fraction, ...]
    shifted: tuple[Fraction, ...]
    multiplicity: tuple[int, ...]


@dataclass(frozen=True)
class ConditionReport:
    """条件の検査結果."""

    passed: bool
    checked: int


@dataclass(frozen=True)
class CertificateReport:
    """証明書.

    kind は "mz" / "condition_i" / "condition_ii" のいずれか。
    点はユーザー座標で書く。functional_index は 0 始まり。
    """

    kind: str
    subsets_checked: int | None = None
    triples_checked: int | None = None
    subset: tuple[tuple[Fraction, ...], ...] | None = None
    sums: tuple[Fraction, ...] | None = None
    point: tuple[Fraction, ...] | None = None
    monomial: tuple[int, ...] | None = None
    monomial_text: str | None = None
    functional_index: int | None = None
    value: Fraction | None = None


@dataclass(frozen=True)
class OracleReport:
    """オラクルの結果（点はユーザー座標）."""

    is_mz: bool
    subsets_checked: int
    witness_subset: tuple[tuple[Fraction, ...], ...] | None
    witness_monomial: tuple[int, ...] | None
    idempotents_in_subspace: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @classmethod
    def from_result(cls, result: OracleResult, spectrum: PointSpectrum) -> OracleReport:
        """OracleResult から作る."""

        def original(subset: Sequence[Point]) -> tuple[tuple[Fraction, ...], ...]:
            return tuple(spectrum.original_point(p) for p in subset)

        return cls(
            is_mz=result.is_mz,
            subsets_checked=result.subsets_checked,
            witness_subset=original(result.witness_subset) if result.witness_subset else None,
            witness_monomial=result.witness_monomial,
            idempotents_in_subspace=tuple(original(s) for s in result.idempotents_in_subspace),
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON に書き出す辞書."""
        return {
            "is_mz": self.is_mz,
            "subsets_checked": self.subsets_checked,
            "witness_subset": (
                [_point(p) for p in self.witness_subset] if self.witness_subset else None
            ),
            "witness_monomial": list(self.witness_monomial) if self.witness_monomial else None,
            "idempotents_in_subspace": [
                [_point(p) for p in subset] for subset in self.idempotents_in_subspace
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> OracleReport:
        """辞書から生成する."""
        witness = data.get("witness_subset")
        monomial = data.get("witness_monomial")
        return cls(
            is_mz=data["is_mz"],
            subsets_checked=data["subsets_checked"],
            witness_subset=tuple(_read_point(p) for p in witness) if witness else None,
            witness_monomial=tuple(monomial) if monomial else None,
            idempotents_in_subspace=tuple(
                tuple(_read_point(p) for p in subset)
                for subset in data["idempotents_in_subspace"]
            ),
        )


@dataclass(frozen=True)
class VerdictReport:
    """decide の結果レポート.

    Attributes:
        variables: 変数名
        is_mz: MZ 空間か
        shift: 適用したシフト
        basis: 元のイデアルの簡約グレブナー基底（消去多項式で与えた場合は空）
        dimension: d = dim k[x]/I
        eliminants: ユーザー座標での f_1, …, f_n
        points: Λ と重複度
        lambda0: Λ₀（ユーザー座標）
        rank: 汎関数の本数 r
        appended_vectors: I を消去多項式上で表すために追加したベクトルの数
        dropped_vectors: 落としたベクトルの数
        certificate: 証明書
        condition_i: 条件 i) の結果
        condition_ii: 条件 ii) の結果
        oracle: オラクルの結果（要求時のみ）
        timings: 段階ごとの経過秒数（要求時のみ）
    """

    variables: tuple[str, ...]
    is_mz: bool
    shift: tuple[Fraction, ...]
    basis: tuple[str, ...]
    dimension: int
    eliminants: tuple[str, ...]
    points: tuple[PointReport, ...]
    lambda0: tuple[tuple[Fraction, ...], ...]
    rank: int
    appended_vectors: int
    dropped_vectors: int
    certificate: CertificateReport
    condition_i: ConditionReport
    condition_ii: ConditionReport
    oracle: OracleReport | None = None
    timings: dict[str, float] | None = None

    @classmethod
    def from_verdict(
        cls,
        verdict: Verdict,
        variables: Sequence[str],
        *,
        oracle: OracleResult | None = None,
        timings: dict[str, float] | None = None,
    ) -> VerdictReport:
        """Verdict から作る."""
        audit = verdict.audit
        spectrum = audit.spectrum
        names = list(variables)
        return cls(
            variables=tuple(names),
            is_mz=verdict.is_mz,
            shift=spectrum.shift,
            basis=tuple(
                format_polynomial(g, names) for g in (audit.basis.generators if audit.basis else ())
            ),
            dimension=audit.quotient.dimension,
            eliminants=tuple(format_polynomial(f, names) for f in audit.eliminants),
            points=tuple(
                PointReport(spectrum.original_point(p), p, spectrum.multiplicity(p))
                for p in spectrum.points
            ),
            lambda0=tuple(spectrum.original_point(p) for p in verdict.lambda0),
            rank=audit.system.rank,
            appended_vectors=audit.appended_vectors,
            dropped_vectors=audit.dropped_vectors,
            certificate=_certificate(verdict, names),
            condition_i=ConditionReport(verdict.condition_i.passed, verdict.condition_i.checked),
            condition_ii=ConditionReport(
                verdict.condition_ii.passed, verdict.condition_ii.checked
            ),
            oracle=OracleReport.from_result(oracle, spectrum) if oracle else None,
            timings=timings,
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON に書き出す辞書."""
        certificate = {k: v for k, v in asdict(self.certificate).items() if v is not None}
        if self.certificate.subset is not None:
            certificate["subset"] = [_point(p) for p in self.certificate.subset]
        if self.certificate.sums is not None:
            certificate["sums"] = _point(self.certificate.sums)
        if self.certificate.point is not None:
            certificate["point"] = _point(self.certificate.point)
        if self.certificate.monomial is not None:
            certificate["monomial"] = list(self.certificate.monomial)
        if self.certificate.value is not None:
            certificate["value"] = _rational(self.certificate.value)
        data: dict[str, Any] = {
            "variables": list(self.variables),
            "is_mz": self.is_mz,
            "shift": _point(self.shift),
            "groebner_basis": list(self.basis),
            "dimension": self.dimension,
            "eliminants": list(self.eliminants),
            "spectrum": [
                {
                    "point": _point(p.point),
                    "shifted": _point(p.shifted),
                    "multiplicity": list(p.multiplicity),
                }
                for p in self.points
            ],
            "lambda0": [_point(p) for p in self.lambda0],
            "rank": self.rank,
            "appended_vectors": self.appended_vectors,
            "dropped_vectors": self.dropped_vectors,
            "certificate": certificate,
            "conditions": {
                "i": asdict(self.condition_i),
                "ii": asdict(self.condition_ii),
            },
        }
        if self.oracle is not None:
            data["oracle"] = self.oracle.to_dict()
        if self.timings is not None:
            data["timings"] = dict(self.timings)
        return data

    def to_json(self) -> str:
        """JSON文字列に変換."""
        return dump_json(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerdictReport:
        """辞書から生成する."""
        cert = data["certificate"]
        subset = cert.get("subset")
        sums = cert.get("sums")
        point = cert.get("point")
        monomial = cert.get("monomial")
        value = cert.get("value")
        return cls(
            variables=tuple(data["variables"]),
            is_mz=data["is_mz"],
            shift=_read_point(data["shift"]),
            basis=tuple(data["groebner_basis"]),
            dimension=data["dimension"],
            eliminants=tuple(data["eliminants"]),
            points=tuple(
                PointReport(
                    _read_point(p["point"]), _read_point(p["shifted"]), tuple(p["multiplicity"])
                )
                for p in data["spectrum"]
            ),
            lambda0=tuple(_read_point(p) for p in data["lambda0"]),
            rank=data["rank"],
            appended_vectors=data["appended_vectors"],
            dropped_vectors=data["dropped_vectors"],
            certificate=CertificateReport(
                kind=cert["kind"],
                subsets_checked=cert.get("subsets_checked"),
                triples_checked=cert.get("triples_checked"),
                subset=tuple(_read_point(p) for p in subset) if subset is not None else None,
                sums=_read_point(sums) if sums is not None else None,
                point=_read_point(point) if point is not None else None,
                monomial=tuple(monomial) if monomial is not None else None,
                monomial_text=cert.get("monomial_text"),
                functional_index=cert.get("functional_index"),
                value=Fraction(value) if value is not None else None,
            ),
            condition_i=ConditionReport(**data["conditions"]["i"]),
            condition_ii=ConditionReport(**data["conditions"]["ii"]),
            oracle=OracleReport.from_dict(data["oracle"]) if data.get("oracle") else None,
            timings=data.get("timings"),
        )

    @classmethod
    def from_json(cls, json_str: str) -> VerdictReport:
        """JSON文字列からインスタンス生成.

        Raises:
            ProblemFileError: レポートとして読めない場合
        """
        try:
            return cls.from_dict(json.loads(json_str))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise ProblemFileError(f"not a verdict report: {e}") from e


def _certificate(verdict: Verdict, names: list[str]) -> CertificateReport:
    spectrum = verdict.audit.spectrum
    certificate = verdict.certificate
    if isinstance(certificate, ConditionIFailure):
        return CertificateReport(
            kind="condition_i",
            subset=tuple(spectrum.original_point(p) for p in certificate.subset),
            sums=certificate.sums,
        )
    if isinstance(certificate, ConditionIIFailure):
        return CertificateReport(
            kind="condition_ii",
            point=spectrum.original_point(certificate.point),
            monomial=certificate.monomial,
            monomial_text=format_polynomial(Polynomial.monomial(certificate.monomial), names),
            functional_index=certificate.functional_index,
            value=certificate.value,
        )
    return CertificateReport(
        kind="mz",
        subsets_checked=certificate.subsets_checked,
        triples_checked=certificate.triples_checked,
    )


def groebner_report(
    basis: GroebnerBasis, quotient: QuotientData | None, variables: Sequence[str]
) -> dict[str, Any]:
    """gb サブコマンドのレポート.

    quotient が None（余次元が無限）のとき dimension は "INFINITE"、staircase は null。
    """
    names = list(variables)
    return {
        "variables": names,
        "order": basis.order.value,
        "groebner_basis": [format_polynomial(g, names) for g in basis.generators],
        "leading_monomials": [list(m) for m in basis.leading_monomials()],
        "dimension": quotient.dimension if quotient is not None else "INFINITE",
        "staircase": [list(m) for m in quotient.staircase] if quotient is not None else None,
    }


def idempotents_report(family: IdempotentFamily, variables: Sequence[str]) -> dict[str, Any]:
    """idempotents サブコマンドのレポート.

    g_λ はシフト後の座標の多項式として書く。
    """
    names = list(variables)
    spectrum = family.spectrum
    return {
        "variables": names,
        "shift": _point(spectrum.shift),
        "idempotents": [
            {
                "point": _point(spectrum.original_point(p)),
                "shifted": _point(p),
                "multiplicity": list(spectrum.multiplicity(p)),
                "g": format_polynomial(family[p], names),
            }
            for p in spectrum.points
        ],
    }


def oracle_report(
    result: OracleResult, spectrum: PointSpectrum, variables: Sequence[str]
) -> dict[str, Any]:
    """oracle サブコマンドのレポート."""
    return {"variables": list(variables), **OracleReport.from_result(result, spectrum).to_dict()}


def dump_json(data: dict[str, Any]) -> str:
    """キーを整列した JSON."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def render_text(data: dict[str, Any], indent: int = 0) -> str:
    """人が読むための字下げテキスト."""
    lines: list[str] = []
    pad = "  " * indent
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{key}:")
            for item in value:
                body = render_text(item, indent + 2).lstrip()
                lines.append(f"{pad}  - {body}")
        else:
            lines.append(f"{pad}{key}: {_text_value(value)}")
    return "\n".join(line for line in lines if line)


def _text_value(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)
