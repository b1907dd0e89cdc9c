"""ドメインモデル."""

from mz_studio.domain.functional import Functional, FunctionalSystem, SubspaceSpec
from mz_studio.domain.ideal import GroebnerBasis, MonomialOrder, QuotientData
from mz_studio.domain.idempotent import IdempotentFamily
from mz_studio.domain.polynomial import Monomial, Point, Polynomial, Scalar
from mz_studio.domain.spectrum import PointSpectrum, RootList
from mz_studio.domain.verdict import LambdaZero, Verdict

__all__ = [
    "Functional",
    "FunctionalSystem",
    "GroebnerBasis",
    "IdempotentFamily",
    "LambdaZero",
    "Monomial",
    "MonomialOrder",
    "Point",
    "PointSpectrum",
    "Polynomial",
    "QuotientData",
    "RootList",
    "Scalar",
    "SubspaceSpec",
    "Verdict",
]
