"""テスト用の hypothesis ストラテジーと小さな問題の組み立て."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from fractions import Fraction

from hypothesis import strategies as st

from mz_studio.application.pipeline import DecisionProblem, DecisionServices
from mz_studio.domain import univariate as up
from mz_studio.domain.polynomial import Polynomial, box_monomials
from mz_studio.infrastructure.polynomial_parser import parse_polynomial
from mz_studio.infrastructure.services import create_services
from mz_studio.infrastructure.settings import DecisionSettings

ROOT_POOL = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))

small_ints = st.integers(min_value=-2, max_value=2)


def problem(
    ideal: Sequence[str], vectors: Sequence[str] = (), variables: Sequence[str] = ("t",)
) -> DecisionProblem:
    """文字列から DecisionProblem を作る."""
    names = list(variables)
    return DecisionProblem(
        nvars=len(names),
        generators=tuple(parse_polynomial(g, names) for g in ideal),
        vectors=tuple(parse_polynomial(v, names) for v in vectors),
    )


def eliminant(roots: Sequence[tuple[Fraction, int]], index: int, nvars: int) -> Polynomial:
    """∏ (x_index - λ)^m."""
    return Polynomial.from_univariate(up.from_roots(roots), index, nvars)


@st.composite
def root_lists(draw: st.DrawFn, max_degree: int = 3) -> tuple[tuple[Fraction, int], ...]:
    """相異なる根と重複度の組（次数の合計は max_degree 以下）."""
    roots = draw(st.lists(st.sampled_from(ROOT_POOL), min_size=1, max_size=3, unique=True))
    result: list[tuple[Fraction, int]] = []
    budget = max_degree
    for root in sorted(roots):
        if budget < 1:
            break
        multiplicity = draw(st.integers(min_value=1, max_value=min(3, budget)))
        result.append((root, multiplicity))
        budget -= multiplicity
    return tuple(result)


@st.composite
def polynomials(draw: st.DrawFn, nvars: int, max_degree: int = 2) -> Polynomial:
    """係数が小さな整数の多項式."""
    monomials = box_monomials([max_degree + 1] * nvars)
    terms = draw(st.dictionaries(st.sampled_from(monomials), small_ints, max_size=4))
    return Polynomial(nvars, terms)


def lagrange_element(
    rootlists: Sequence[Sequence[tuple[Fraction, int]]], point: Sequence[Fraction]
) -> Polynomial:
    """λ 以外の局所因子をすべて掛けた元. A·g_λ に属する."""
    nvars = len(rootlists)
    result = Polynomial.one(nvars)
    for index, (roots, value) in enumerate(zip(rootlists, point, strict=True)):
        others = [(root, m) for root, m in roots if root != value]
        if others:
            result = result * eliminant(others, index, nvars)
    return result


@st.composite
def eliminant_problems(draw: st.DrawFn, max_nvars: int = 2) -> DecisionProblem:
    """消去多項式で与えた小さな問題（n ≤ 2, 各 d_i ≤ 3）.

    ベクトルには乱数の多項式と、冪等元の倍元（Λ₀ を空にしないため）を混ぜる。
    """
    nvars = draw(st.integers(min_value=1, max_value=max_nvars))
    rootlists = [draw(root_lists()) for _ in range(nvars)]
    eliminants = tuple(eliminant(roots, index, nvars) for index, roots in enumerate(rootlists))
    degrees = [sum(m for _, m in roots) for roots in rootlists]
    vectors: list[Polynomial] = []
    count = draw(st.integers(min_value=0, max_value=min(3, max(degrees) + 1)))
    for _ in range(count):
        if draw(st.booleans()):
            point = tuple(draw(st.sampled_from([r for r, _ in roots])) for roots in rootlists)
            vectors.append(lagrange_element(rootlists, point))
        else:
            vectors.append(draw(polynomials(nvars, max_degree=max(degrees) - 1)))
    return DecisionProblem(nvars=nvars, eliminants=eliminants, vectors=tuple(vectors))


@st.composite
def triangular_problems(draw: st.DrawFn) -> DecisionProblem:
    """I = (x0 - p(x1), f(x1)) の形の、生成元で与えた問題."""
    roots = draw(root_lists())
    f = eliminant(roots, 1, 2)
    a, b = draw(small_ints), draw(small_ints)
    x0 = Polynomial.variable(0, 2)
    x1 = Polynomial.variable(1, 2)
    generators = (x0 - (x1 * a + b), f)
    vectors = tuple(draw(st.lists(polynomials(2, max_degree=1), max_size=2)))
    return DecisionProblem(nvars=2, generators=generators, vectors=vectors)


def decision_problems() -> st.SearchStrategy[DecisionProblem]:
    """判定の対象となる小さな問題."""
    return st.one_of(eliminant_problems(), triangular_problems())


def make_services(engine: str = "buchberger") -> DecisionServices:
    """@given のテストで使うサービス（関数スコープのフィクスチャは使えない）."""
    return create_services(DecisionSettings(groebner_engine=engine))


@st.composite
def ideal_subspace_problems(
    draw: st.DrawFn, max_nvars: int = 2
) -> tuple[DecisionProblem, tuple[tuple[Fraction, ...], ...]]:
    """V が A のイデアルになる問題と、そのイデアルが台とする点.

    点 λ ごとに g_λ の生成する A·g_λ を階段単項式の倍元で張る。
    """
    nvars = draw(st.integers(min_value=1, max_value=max_nvars))
    rootlists = [draw(root_lists()) for _ in range(nvars)]
    eliminants = tuple(eliminant(roots, index, nvars) for index, roots in enumerate(rootlists))
    grid = list(itertools.product(*([r for r, _ in roots] for roots in rootlists)))
    support = tuple(draw(st.lists(st.sampled_from(grid), max_size=min(3, len(grid)), unique=True)))
    degrees = [sum(m for _, m in roots) for roots in rootlists]
    vectors = tuple(
        lagrange_element(rootlists, point).mul_monomial(m)
        for point in support
        for m in box_monomials(degrees)
    )
    return DecisionProblem(nvars=nvars, eliminants=eliminants, vectors=vectors), support
