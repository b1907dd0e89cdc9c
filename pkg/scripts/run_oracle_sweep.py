"""判定とオラクルの一致を乱数の問題で確かめるスクリプト.

消去多項式の根と重複度、ベクトルの係数を乱数で選び、decide と総当たりの結果を比べる。

使用方法:
    python scripts/run_oracle_sweep.py
    python scripts/run_oracle_sweep.py --count 500 --seed 7 --nvars 2
"""

import argparse
import random
import time
from fractions import Fraction

from mz_studio.application.mzdecide import decide
from mz_studio.application.oracle import brute_force_decide, multiplication_table
from mz_studio.application.pipeline import DecisionOptions, DecisionProblem, prepare_problem
from mz_studio.domain import univariate as up
from mz_studio.domain.errors import MzStudioError
from mz_studio.domain.polynomial import Polynomial, box_monomials
from mz_studio.infrastructure.polynomial_parser import default_variables, format_polynomial
from mz_studio.infrastructure.services import create_services
from mz_studio.infrastructure.settings import DecisionSettings

ROOTS = [Fraction(v) for v in (-2, -1, 0, 1, 2, 3)] + [Fraction(1, 2), Fraction(-1, 3)]


def random_eliminant(rng: random.Random, index: int, nvars: int, max_degree: int) -> Polynomial:
    """相異なる根と重複度から f_i(x_i) を作る."""
    degree = rng.randint(1, max_degree)
    roots: dict[Fraction, int] = {}
    while sum(roots.values()) < degree:
        root = rng.choice(ROOTS)
        roots[root] = roots.get(root, 0) + 1
    return Polynomial.from_univariate(up.from_roots(sorted(roots.items())), index, nvars)


def random_vector(rng: random.Random, degrees: list[int]) -> Polynomial:
    """階段単項式上の小さな整数係数の多項式."""
    monomials = box_monomials(degrees)
    terms = {m: rng.randint(-2, 2) for m in rng.sample(monomials, k=min(3, len(monomials)))}
    return Polynomial(len(degrees), terms)


def random_problem(rng: random.Random, nvars: int, max_degree: int) -> DecisionProblem:
    """乱数の問題を作る."""
    eliminants = tuple(random_eliminant(rng, i, nvars, max_degree) for i in range(nvars))
    degrees = [f.degree_in(i) for i, f in enumerate(eliminants)]
    vectors = tuple(random_vector(rng, degrees) for _ in range(rng.randint(0, 3)))
    return DecisionProblem(nvars=nvars, eliminants=eliminants, vectors=vectors)


def describe(problem: DecisionProblem) -> str:
    """問題を一行で表す."""
    names = default_variables(problem.nvars)
    ideal = ", ".join(format_polynomial(f, names) for f in problem.eliminants)
    vectors = ", ".join(format_polynomial(v, names) for v in problem.vectors)
    return f"I=({ideal}) V+=[{vectors}]"


def main() -> None:
    """メイン処理."""
    parser = argparse.ArgumentParser(description="decide とオラクルの一致を乱数の問題で確かめる")
    parser.add_argument("--count", type=int, default=200, help="問題の数 (default: 200)")
    parser.add_argument("--seed", type=int, default=0, help="乱数の種 (default: 0)")
    parser.add_argument("--nvars", type=int, default=2, help="変数の個数 (default: 2)")
    parser.add_argument("--max-degree", type=int, default=3, help="f_i の次数の上限 (default: 3)")
    parser.add_argument(
        "--engine", choices=("buchberger", "sympy"), default="buchberger", help="GB エンジン"
    )
    args = parser.parse_args()

    rng = random.Random(args.seed)
    services = create_services(DecisionSettings(groebner_engine=args.engine))
    options = DecisionOptions()

    print(f"Checking {args.count} problem(s) in {args.nvars} variable(s)...")
    started = time.perf_counter()
    mz_count = 0
    mismatches = 0
    skipped = 0
    for k in range(args.count):
        problem = random_problem(rng, args.nvars, args.max_degree)
        try:
            verdict = decide(problem, services, options)
            prepared = prepare_problem(problem, services, options)
            table = multiplication_table(prepared.quotient)
            result = brute_force_decide(
                prepared.family, prepared.vbasis, table, options.subset_cap
            )
        except MzStudioError as e:
            print(f"  [{k}] skipped: {e}")
            skipped += 1
            continue
        mz_count += verdict.is_mz
        if verdict.is_mz != result.is_mz:
            mismatches += 1
            print(f"  [{k}] MISMATCH decide={verdict.is_mz} oracle={result.is_mz}")
            print(f"        {describe(problem)}")

    elapsed = time.perf_counter() - started
    print(f"\n{'=' * 60}")
    print(f"Problems:   {args.count} ({skipped} skipped)")
    print(f"MZ:         {mz_count}")
    print(f"Mismatches: {mismatches}")
    print(f"Elapsed:    {elapsed:.2f}s")


if __name__ == "__main__":
    main()
