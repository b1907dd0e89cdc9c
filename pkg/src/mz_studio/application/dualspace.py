"""ker 𝔏 = V となる汎関数系の構成と評価.

各汎関数は L = Σ_λ S_λ∘P_λ(D) の係数表 p_{λ,j}（j < m(λ)）として持つ。
V̄ を消す値ベクトル ℓ を零空間から求め、初等行列 M を通して p = (Mᵀ)⁻¹ ℓ とする。
"""

from __future__ import annotations

import logging
from fractions import Fraction

from mz_studio.domain import linalg
from mz_studio.domain.errors import FunctionalConsistencyError, SingularMatrixError
from mz_studio.domain.functional import (
    ElementaryMatrix,
    Functional,
    FunctionalKey,
    FunctionalSystem,
    SubspaceSpec,
)
from mz_studio.domain.ideal import QuotientData
from mz_studio.domain.polynomial import (
    Point,
    Polynomial,
    apply_p_of_d,
    box_monomials,
    d_eigenvalue,
    evaluate,
)
from mz_studio.domain.spectrum import PointSpectrum

logger = logging.getLogger(__name__)


def reduce_subspace(
    spec: SubspaceSpec, quotient: QuotientData
) -> tuple[list[Polynomial], int]:
    """v_j の正規形を行簡約して V̄ = V/I の基底を作る.

    Returns:
        (V̄ の基底, 一次従属または I に属するため落としたベクトルの数)
    """
    rows = [quotient.coordinates(v) for v in spec.vectors]
    reduced, _ = linalg.rref(rows, quotient.dimension) if rows else ([], [])
    basis = [quotient.from_coordinates(row) for row in reduced]
    dropped = len(rows) - len(basis)
    if dropped:
        logger.info("%d vector(s) dropped as dependent or lying in the ideal", dropped)
    return basis, dropped


def elementary_keys(spectrum: PointSpectrum) -> list[FunctionalKey]:
    """初等汎関数 S_λ∘D^j の添字 (λ, j), j < m(λ)."""
    return [
        (point, j)
        for point in spectrum.points
        for j in box_monomials(spectrum.multiplicity(point))
    ]


def elementary_matrix(spectrum: PointSpectrum, quotient: QuotientData) -> ElementaryMatrix:
    """(S_λ∘D^j)(x^m) = m^j λ^m を並べた d×d 行列.

    Raises:
        SingularMatrixError: 行列が正則でない場合（0 ∈ Λ_i などの前提違反）
    """
    keys = elementary_keys(spectrum)
    columns = quotient.staircase
    if len(keys) != len(columns):
        raise SingularMatrixError(
            f"{len(keys)} elementary functionals for a quotient of dimension {len(columns)}"
        )
    entries = tuple(
        tuple(
            d_eigenvalue(j, m) * evaluate(Polynomial.monomial(m), point) for m in columns
        )
        for point, j in keys
    )
    det = linalg.determinant(entries)
    if not det:
        raise SingularMatrixError("elementary matrix is singular")
    logger.debug("elementary matrix of size %d, determinant %s", len(keys), det)
    return ElementaryMatrix(tuple(keys), tuple(columns), entries)


def annihilator_functionals(
    vbasis: list[Polynomial],
    matrix: ElementaryMatrix,
    quotient: QuotientData,
    spectrum: PointSpectrum,
) -> FunctionalSystem:
    """V̄ を核とする汎関数系を求める.

    V̄ の座標行の零空間（正規化済み基底）が値ベクトル ℓ = (L(x^m))_m を与え、
    係数表は p = (Mᵀ)⁻¹ ℓ となる。本数は r = d - dim V̄.
    """
    dimension = quotient.dimension
    rows = [quotient.coordinates(w) for w in vbasis]
    values = linalg.nullspace(rows, dimension)
    transposed_inverse = linalg.inverse(linalg.transpose(matrix.entries))
    functionals: list[Functional] = []
    for ell in values:
        p = linalg.mat_vec(transposed_inverse, ell)
        functionals.append(Functional(dict(zip(matrix.rows, p, strict=True)), ell))
    logger.info(
        "functional system of rank %d (d=%d, |Λ|=%d)",
        len(functionals),
        dimension,
        len(spectrum.points),
    )
    return FunctionalSystem(tuple(functionals), tuple(vbasis), matrix.rows)


def evaluate_functional(
    functional: Functional, f: Polynomial, *, quotient: QuotientData | None = None
) -> Fraction:
    """L(f) = Σ_λ Σ_j p_{λ,j} (D^j f)(λ) を厳密に計算する.

    quotient を渡すと正規形上の値ベクトルによる評価とも照合する。

    Raises:
        FunctionalConsistencyError: 二通りの評価が一致しない場合
    """
    points = dict.fromkeys(point for point, _ in functional.coefficients)
    value = sum(
        (evaluate(apply_p_of_d(functional.operator(point), f), point) for point in points),
        start=Fraction(0),
    )
    if quotient is not None:
        reduced = linalg.dot(functional.values, quotient.coordinates(f))
        if reduced != value:
            raise FunctionalConsistencyError(
                f"functional evaluates to {value} directly but {reduced} on the normal form"
            )
    return value


def functional_at_idempotent(functional: Functional, point: Point) -> Fraction:
    """L(g_λ) = P_λ(0). 係数表の参照だけで求まる."""
    return functional.constant_coefficient(point)
