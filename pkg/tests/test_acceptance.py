"""End-to-end acceptance checks.

Run with ``pytest -s tests/test_acceptance.py`` to see one pass/fail line per
criterion. Each test prints its verdict before asserting, so the printed
summary is complete even when something fails.
"""

import time

import numpy as np

from arrowdpr1.bench import fit_exponent, run_bench, series
from arrowdpr1.verify import (SENTINEL_CASES, check_algebra,
                              check_block_flatten, check_block_singular,
                              check_det_oracle, check_inverse,
                              check_matvec_oracle, check_opcounts,
                              check_sentinels, check_study_det,
                              sentinel_deviation)

FIELDS = ("real", "complex", "quaternion", "block")


def _report(num: int, name: str, ok: bool, detail: str = "") -> bool:
    tail = f"  ({detail})" if detail else ""
    print(f"\n[ACCEPTANCE {num}] {name}: {'PASS' if ok else 'FAIL'}{tail}")
    return ok


def test_criterion_1_matvec_oracle():
    start = time.perf_counter()
    rng = np.random.default_rng(101)
    results = []
    for field in FIELDS:
        for n in range(2, 41):
            results.append(check_matvec_oracle(rng, field, 200, sizes=(n,)))
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results) and elapsed < 30.0
    worst = max(r.detail for r in results)
    assert _report(1, "matvec vs dense oracle", ok,
                   f"{len(results) * 200} instances, {elapsed:.1f}s, {worst}")


def test_criterion_2_det_oracle():
    rng = np.random.default_rng(102)
    real = check_det_oracle(rng, "real", 200)
    cplx = check_det_oracle(rng, "complex", 200)
    ok = real.passed and cplx.passed
    assert _report(2, "determinant vs dense oracle", ok,
                   f"400 instances, {real.detail}, {cplx.detail}")


def test_criterion_3_study_det():
    rng = np.random.default_rng(103)
    r = check_study_det(rng, 200)
    assert _report(3, "quaternion det magnitude vs complex image", r.passed,
                   f"{r.checks} instances, {r.detail}")


def test_criterion_4_inverse():
    rng = np.random.default_rng(104)
    results = [check_inverse(rng, field, 200) for field in FIELDS]
    ok = all(r.passed for r in results)
    assert _report(4, "inverse residual and structure tags", ok,
                   f"{sum(r.checks for r in results)} instances")


def test_criterion_5_sentinels():
    r = check_sentinels()
    margins = {site: sentinel_deviation(site) for site in SENTINEL_CASES}
    ok = (r.passed
          and all(clean <= 1e-10 for clean, _ in margins.values())
          and all(swapped >= 0.1 for _, swapped in margins.values()))
    worst = min(swapped for _, swapped in margins.values())
    assert _report(5, "ordering sentinels", ok,
                   f"smallest commuted deviation {worst:.3f}")


def test_criterion_6_linear_scaling():
    start = time.perf_counter()
    counts = check_opcounts()
    records = run_bench((1000, 2000, 4000, 8000, 16000), ("real",), seed=106)
    exps = {key: fit_exponent([(r.n, r.ns_median) for r in recs])
            for key, recs in series(records).items()}
    elapsed = time.perf_counter() - start
    ok = (counts.passed
          and all(0.8 <= e <= 1.3 for e in exps.values())
          and elapsed < 120.0)
    lo, hi = min(exps.values()), max(exps.values())
    assert _report(6, "O(n) op counts and wall time", ok,
                   f"{counts.detail}, time exponents {lo:.2f}..{hi:.2f}, "
                   f"{elapsed:.1f}s")


def test_criterion_7_block_flatten():
    rng = np.random.default_rng(107)
    flat = check_block_flatten(rng, 200)
    sing = check_block_singular()
    ok = flat.passed and sing.passed
    assert _report(7, "block results vs flattened oracle", ok,
                   f"{flat.checks} instances, {flat.detail}; "
                   f"{sing.checks} singular-entry aborts")


def test_criterion_8_algebra():
    rng = np.random.default_rng(108)
    r = check_algebra(rng, 1000)
    assert _report(8, "quaternion algebra and embedding", r.passed,
                   f"{r.checks} checks, {r.detail}")
