"""冪等元族のドメインモデル."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

from mz_studio.domain.polynomial import Point, Polynomial
from mz_studio.domain.spectrum import PointSpectrum


@dataclass(frozen=True)
class IdempotentFamily:
    """A = k[x]/I の直交冪等元基底を表す多項式 g_λ の族.

    Attributes:
        spectrum: 族の添字となる Λ
        elements: λ → g_λ（I に関する正規形）
    """

    spectrum: PointSpectrum
    elements: Mapping[Point, Polynomial]

    def __getitem__(self, point: Point) -> Polynomial:
        return self.elements[point]

    def points(self) -> tuple[Point, ...]:
        """Λ の元（spectrum と同じ順）."""
        return self.spectrum.points

    def replace(self, point: Point, element: Polynomial) -> IdempotentFamily:
        """一つの g_λ を差し替えた族を返す."""
        elements = dict(self.elements)
        elements[point] = element
        return IdempotentFamily(self.spectrum, elements)


class ViolationKind(Enum):
    """冪等元族の違反の種類."""

    ZERO = "non-zero idempotent"
    NOT_IDEMPOTENT = "idempotency"
    NOT_ORTHOGONAL = "orthogonality"
    SUM_NOT_ONE = "sum equals one"
    LOCAL_CONGRUENCE = "local congruence"


@dataclass(frozen=True)
class FamilyViolation:
    """最初に見つかった違反.

    Attributes:
        kind: 違反の種類
        points: 関係する λ（直交性なら2点）
    """

    kind: ViolationKind
    points: tuple[Point, ...] = ()


@dataclass(frozen=True)
class FamilyVerification:
    """verify_family の結果."""

    is_valid: bool
    violation: FamilyViolation | None = None
