"""Randomized property verification.

Each check function draws instances from a caller-supplied Generator, runs a
fast structured operation next to the dense oracle, and reports counts. The
CLI verifier and the acceptance tests both run these; with a fixed seed the
whole suite is deterministic, including the summary text.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .blockscalar import BlockScalar
from .errors import StructureNotRepresentableError
from .fastops import (DetBranch, arrow_det, arrow_inv, arrow_matvec,
                      block_det_reduce, commuted_product, dpr1_det, dpr1_inv,
                      dpr1_matvec)
from .oracle import (dense_det, dense_det_quaternion_magnitude, dense_inv,
                     dense_matvec, expand_block, flatten_block_vector,
                     flatten_structured, identity, mat_mul, max_abs_diff,
                     max_mag, vec_max_abs_diff)
from .quaternion import Quaternion
from .sampling import (FIELDS, sample_arrow, sample_dpr1, sample_vector,
                       singular_nonzero_block)
from .scalars import CountingScalar, mag
from .structured import (ArrowMatrix, DPR1Matrix, shaft_to_matrix, to_dense)

MATVEC_TOL = {"real": 1e-11, "complex": 1e-11, "quaternion": 1e-10}

DEFAULT_SIZES = (2, 3, 4, 5, 7, 10, 13, 16, 20)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checks: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _rel_vec_err(fast: list, ref: list) -> float:
    scale = max(max((mag(e) for e in ref), default=0.0), 1e-300)
    return vec_max_abs_diff(fast, ref) / scale


def _rel_mat_err(fast: list[list], ref: list[list]) -> float:
    return max_abs_diff(fast, ref) / max(max_mag(ref), 1e-300)


def check_matvec_oracle(rng: np.random.Generator, field: str, trials: int,
                        sizes=DEFAULT_SIZES) -> PropertyResult:
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.choice(sizes))
        k = 1 + t % 4
        base = ("real", "complex")[(t // 4) % 2]
        kw = dict(block_k=k, block_base=base)
        if t % 2 == 0:
            m = sample_arrow(rng, n, field, **kw)
            z = sample_vector(rng, n, field, **kw)
            fast = arrow_matvec(m, z)
        else:
            m = sample_dpr1(rng, n, field, **kw)
            z = sample_vector(rng, n, field, **kw)
            fast = dpr1_matvec(m, z)
        if field == "block":
            # array-assembled oracle; the object-path oracle covers blocks in
            # the flatten property at small n
            ref = flatten_structured(m) @ flatten_block_vector(z)
            got = flatten_block_vector(fast)
            scale = max(float(np.max(np.abs(ref))), 1e-300)
            err = float(np.max(np.abs(got - ref))) / scale
        else:
            err = _rel_vec_err(fast, dense_matvec(to_dense(m), z))
        worst = max(worst, err)
        tol = k * 1e-10 if field == "block" else MATVEC_TOL[field]
        if err > tol:
            failures += 1
    return PropertyResult(f"matvec-oracle[{field}]", trials, failures,
                          f"max rel err {worst:.3e}")


def check_det_oracle(rng: np.random.Generator, field: str,
                     trials: int) -> PropertyResult:
    """Fast determinant against the LU oracle, both branches, real/complex."""
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.integers(2, 26))
        zero_at = int(rng.integers(0, n - 1 if t % 4 == 1 else n)) \
            if t % 2 == 1 else None
        if t % 4 < 2:
            m = sample_arrow(rng, n, field, mag_band=True, zero_at=zero_at)
            res = arrow_det(m)
        else:
            m = sample_dpr1(rng, n, field, mag_band=True, zero_at=zero_at)
            res = dpr1_det(m)
        want = DetBranch.ONE_ZERO if zero_at is not None else DetBranch.FULL_DIAGONAL
        ref = dense_det(to_dense(m))
        err = mag(res.value - ref) / max(mag(ref), 1e-300)
        worst = max(worst, err)
        if err > 1e-8 or res.branch is not want:
            failures += 1
    return PropertyResult(f"det-oracle[{field}]", trials, failures,
                          f"max rel err {worst:.3e}")


def check_study_det(rng: np.random.Generator, trials: int) -> PropertyResult:
    """Quaternion determinant magnitude against the complex-image oracle."""
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.integers(2, 13))
        zero_at = int(rng.integers(0, n - 1 if t % 4 == 1 else n)) \
            if t % 2 == 1 else None
        if t % 4 < 2:
            m = sample_arrow(rng, n, "quaternion", mag_band=True, zero_at=zero_at)
            res = arrow_det(m)
        else:
            m = sample_dpr1(rng, n, "quaternion", mag_band=True, zero_at=zero_at)
            res = dpr1_det(m)
        ref = dense_det_quaternion_magnitude(to_dense(m))
        err = abs(res.magnitude - ref) / max(ref, 1e-300)
        worst = max(worst, err)
        if err > 1e-8 or res.value is not None:
            failures += 1
    return PropertyResult("study-det[quaternion]", trials, failures,
                          f"max rel err {worst:.3e}")


def _expected_tip(m, zero_at: int) -> int:
    """1-based matrix position where the inverse's tip must land."""
    if isinstance(m, ArrowMatrix):
        return shaft_to_matrix(m.tip0, zero_at) + 1
    return zero_at + 1


def check_inverse(rng: np.random.Generator, field: str, trials: int,
                  sizes=(2, 3, 4, 5, 6, 8, 10)) -> PropertyResult:
    """Residual and structural tags for both inverse branches."""
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.choice(sizes))
        zero_at = int(rng.integers(0, n - 1)) if (t % 2 == 1 and n >= 2) else None
        if t % 4 < 2:
            m = sample_arrow(rng, n, field, conditioned=True,
                             zero_at=zero_at if n >= 2 else None)
            inv_m = arrow_inv(m)
        else:
            m = sample_dpr1(rng, n, field, conditioned=True, zero_at=zero_at)
            inv_m = dpr1_inv(m)
        if zero_at is None:
            tag_ok = isinstance(inv_m, DPR1Matrix)
        else:
            tag_ok = (isinstance(inv_m, ArrowMatrix)
                      and inv_m.tip == _expected_tip(m, zero_at))
        da, di = to_dense(m), to_dense(inv_m)
        kappa = max_mag(da) * max_mag(di)
        resid = max_abs_diff(mat_mul(da, di), identity(n, da[0][0]))
        rel = resid / max(1e-9 * n * kappa, 1e-300)
        worst = max(worst, rel)
        if not tag_ok or resid > 1e-9 * n * kappa:
            failures += 1
    return PropertyResult(f"inverse-oracle[{field}]", trials, failures,
                          f"worst residual {worst:.3f} of budget")


def check_double_inverse(rng: np.random.Generator, field: str,
                         trials: int) -> PropertyResult:
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.integers(2, 9))
        zero_at = int(rng.integers(0, n - 1)) if t % 2 == 1 else None
        if t % 4 < 2:
            m = sample_arrow(rng, n, field, conditioned=True, zero_at=zero_at)
        else:
            m = sample_dpr1(rng, n, field, conditioned=True, zero_at=zero_at)
        first = arrow_inv(m) if isinstance(m, ArrowMatrix) else dpr1_inv(m)
        back = arrow_inv(first) if isinstance(first, ArrowMatrix) else dpr1_inv(first)
        err = _rel_mat_err(to_dense(back), to_dense(m))
        worst = max(worst, err)
        if err > 1e-8:
            failures += 1
    return PropertyResult(f"double-inverse[{field}]", trials, failures,
                          f"max rel err {worst:.3e}")


def check_block_flatten(rng: np.random.Generator, trials: int) -> PropertyResult:
    """Block fast results equal base-scalar dense results on the expansion."""
    failures = 0
    worst = 0.0
    for t in range(trials):
        k = 1 + t % 3
        base = ("real", "complex")[(t // 3) % 2]
        n = int(rng.integers(2, 7))
        kw = dict(block_k=k, block_base=base, conditioned=True)
        if t % 2 == 0:
            m = sample_arrow(rng, n, "block", **kw)
            fast_mv, fast_det, fast_inv = arrow_matvec, arrow_det, arrow_inv
        else:
            m = sample_dpr1(rng, n, "block", **kw)
            fast_mv, fast_det, fast_inv = dpr1_matvec, dpr1_det, dpr1_inv
        flat = expand_block(to_dense(m))
        op = t % 3
        if op == 0:
            z = sample_vector(rng, n, "block", block_k=k, block_base=base)
            w = fast_mv(m, z)
            w_flat = expand_block([[e] for e in w])
            ref = mat_mul(flat, expand_block([[e] for e in z]))
            err = _rel_mat_err(w_flat, ref)
        elif op == 1:
            ref = dense_det(flat)
            got = block_det_reduce(fast_det(m))
            err = mag(got - ref) / max(mag(ref), 1e-300)
        else:
            ref = dense_inv(flat)
            got = expand_block(to_dense(fast_inv(m)))
            err = _rel_mat_err(got, ref)
        worst = max(worst, err)
        if err > k * 1e-9:
            failures += 1
    return PropertyResult("block-flatten", trials, failures,
                          f"max rel err {worst:.3e}")


def check_block_singular() -> PropertyResult:
    """Singular (but nonzero) block entries must abort det and inv."""
    bad = singular_nonzero_block(2, "real")
    good = BlockScalar(np.array([[2.0, 0.3], [0.1, 2.0]]))
    checks = 0
    failures = 0
    arrow = ArrowMatrix([bad, good], [good, good], [good, good], good, tip=3)
    dpr1 = DPR1Matrix([good, bad], [good, good], [good, good], good)
    for fn, m in ((arrow_det, arrow), (arrow_inv, arrow),
                  (dpr1_det, dpr1), (dpr1_inv, dpr1)):
        checks += 1
        try:
            fn(m)
        except StructureNotRepresentableError:
            continue
        failures += 1
    return PropertyResult("block-singular-raises", checks, failures)


# Fixed quaternion instances for the ordering sentinels. Each pairs with one
# marked product site in fastops; flipping that site must move the answer by
# at least 0.1 while the unmodified build matches the dense oracle.
SENTINEL_CASES = {
    "dpr1-det-term": DPR1Matrix(
        diag=[Quaternion(0, 1, 0, 0), Quaternion(1, 0, 1, 0)],
        x=[Quaternion(1, 0, 0, 1), Quaternion(0, 0, 1, 0)],
        y=[Quaternion(0, 0, 1, 0), Quaternion(0, 1, 0, 1)],
        rho=Quaternion(0, 1, 1, 0)),
    "arrow-inv-denominator-term": ArrowMatrix(
        diag=[Quaternion(0, 1, 0, 0), Quaternion(1, 0, 1, 0)],
        u=[Quaternion(1, 0, 0, 1), Quaternion(0, 0, 1, 0)],
        v=[Quaternion(0, 1, 1, 0), Quaternion(0, 0, 0, 1)],
        alpha=Quaternion(1, 1, 0, 0), tip=2),
    "dpr1-inv-rho": DPR1Matrix(
        diag=[Quaternion(1, 1, 0, 0), Quaternion(0, 0, 1, 0)],
        x=[Quaternion(0, 1, 0, 1), Quaternion(1, 0, 0, 0)],
        y=[Quaternion(0, 0, 1, 0), Quaternion(1, 0, 0, 1)],
        rho=Quaternion(0, 1, 0, 0)),
}


def sentinel_deviation(site: str) -> tuple[float, float]:
    """(clean error vs oracle, deviation vs oracle with the site commuted)."""
    m = SENTINEL_CASES[site]
    if site == "dpr1-det-term":
        ref = dense_det_quaternion_magnitude(to_dense(m))
        clean = abs(dpr1_det(m).magnitude - ref)
        with commuted_product(site):
            swapped = abs(dpr1_det(m).magnitude - ref)
        return clean, swapped
    op = arrow_inv if isinstance(m, ArrowMatrix) else dpr1_inv
    ref = dense_inv(to_dense(m))
    clean = max_abs_diff(to_dense(op(m)), ref)
    with commuted_product(site):
        swapped = max_abs_diff(to_dense(op(m)), ref)
    return clean, swapped


def check_sentinels(inject: str | None = None) -> PropertyResult:
    """Ordering sentinels; `inject` simulates a build with one commuted site."""
    checks = 0
    failures = 0
    worst_clean = 0.0
    for site in SENTINEL_CASES:
        if inject == site:
            # measure the "clean" run inside the injected-bug context, so the
            # sentinel sees the commuted product and must report a failure
            with commuted_product(site):
                clean, _ = sentinel_deviation(site)
            swapped = None
        else:
            clean, swapped = sentinel_deviation(site)
            worst_clean = max(worst_clean, clean)
        checks += 1
        if clean > 1e-10:
            failures += 1
        if swapped is not None:
            checks += 1
            if swapped < 0.1:
                failures += 1
    return PropertyResult("ordering-sentinels", checks, failures,
                          f"max clean err {worst_clean:.3e}")


def check_opcounts() -> PropertyResult:
    """Scalar-operation counts must double when n doubles."""
    rng = np.random.default_rng(20240809)
    sizes = (250, 500, 1000, 2000)
    failures = 0
    checks = 0
    worst = 0.0
    for kind in ("arrow", "dpr1"):
        counts = {"matvec": [], "det": [], "inv": []}
        for n in sizes:
            if kind == "arrow":
                m = sample_arrow(rng, n, "real", conditioned=True)
                mm = ArrowMatrix([CountingScalar(s) for s in m.diag],
                                 [CountingScalar(s) for s in m.u],
                                 [CountingScalar(s) for s in m.v],
                                 CountingScalar(m.alpha), tip=m.tip)
                ops = (("matvec", lambda: arrow_matvec(
                            mm, [CountingScalar(1.0)] * n)),
                       ("det", lambda: arrow_det(mm)),
                       ("inv", lambda: arrow_inv(mm)))
            else:
                m = sample_dpr1(rng, n, "real", conditioned=True)
                mm = DPR1Matrix([CountingScalar(s) for s in m.diag],
                                [CountingScalar(s) for s in m.x],
                                [CountingScalar(s) for s in m.y],
                                CountingScalar(m.rho))
                ops = (("matvec", lambda: dpr1_matvec(
                            mm, [CountingScalar(1.0)] * n)),
                       ("det", lambda: dpr1_det(mm)),
                       ("inv", lambda: dpr1_inv(mm)))
            for name, fn in ops:
                CountingScalar.reset()
                fn()
                counts[name].append(CountingScalar.count())
        for name, series in counts.items():
            for small, big in zip(series, series[1:]):
                ratio = big / small
                checks += 1
                worst = max(worst, abs(ratio - 2.0))
                if not 1.9 <= ratio <= 2.1:
                    failures += 1
    return PropertyResult("opcount-linearity", checks, failures,
                          f"max |ratio-2| {worst:.3f}")


def check_kernels(rng: np.random.Generator, field: str,
                  trials: int) -> PropertyResult:
    """Active array-kernel backend against the generic object path."""
    tol = MATVEC_TOL[field]
    failures = 0
    worst = 0.0
    for t in range(trials):
        n = int(rng.integers(2, 40))
        quat = field == "quaternion"
        if t % 2 == 0:
            m = sample_arrow(rng, n, field, conditioned=True)
            z = sample_vector(rng, n, field)
            d, u, v, alpha, tip = kernels.arrow_arrays(m)
            za = kernels.quaternion_array(z) if quat \
                else np.asarray(z, dtype=d.dtype)
            if quat:
                w = kernels.arrow_matvec_q(d, u, v, alpha, tip, za)
                det = kernels.arrow_det_q(d, u, v, alpha)
                iv = kernels.arrow_inv_q(d, u, v, alpha, tip)
            else:
                w = kernels.arrow_matvec(d, u, v, alpha, tip, za)
                det = kernels.arrow_det(d, u, v, alpha)
                iv = kernels.arrow_inv(d, u, v, alpha, tip)
            w_ref = arrow_matvec(m, z)
            det_ref = arrow_det(m)
            inv_ref = arrow_inv(m)
        else:
            m = sample_dpr1(rng, n, field, conditioned=True)
            z = sample_vector(rng, n, field)
            d, x, y, rho = kernels.dpr1_arrays(m)
            za = kernels.quaternion_array(z) if quat \
                else np.asarray(z, dtype=d.dtype)
            if quat:
                w = kernels.dpr1_matvec_q(d, x, y, rho, za)
                det = kernels.dpr1_det_q(d, x, y, rho)
                iv = kernels.dpr1_inv_q(d, x, y, rho)
            else:
                w = kernels.dpr1_matvec(d, x, y, rho, za)
                det = kernels.dpr1_det(d, x, y, rho)
                iv = kernels.dpr1_inv(d, x, y, rho)
            w_ref = dpr1_matvec(m, z)
            det_ref = dpr1_det(m)
            inv_ref = dpr1_inv(m)
        if quat:
            w_err = float(np.max(np.abs(w - kernels.quaternion_array(w_ref))))
            w_err /= max(float(np.max(np.abs(w))), 1e-300)
            det_err = abs(det - det_ref.magnitude) / max(det_ref.magnitude, 1e-300)
            iv_ref_arrays = (kernels.quaternion_array(inv_ref.diag),
                             kernels.quaternion_array(inv_ref.x),
                             kernels.quaternion_array(inv_ref.y),
                             kernels.quaternion_array([inv_ref.rho])[0])
        else:
            w_err = float(np.max(np.abs(w - np.asarray(w_ref, dtype=w.dtype))))
            w_err /= max(float(np.max(np.abs(w))), 1e-300)
            det_err = abs(det - det_ref.value) / max(abs(det_ref.value), 1e-300)
            iv_ref_arrays = (np.asarray(inv_ref.diag, dtype=d.dtype),
                             np.asarray(inv_ref.x, dtype=d.dtype),
                             np.asarray(inv_ref.y, dtype=d.dtype),
                             inv_ref.rho)
        iv_err = 0.0
        for got, ref in zip(iv, iv_ref_arrays):
            scale = max(float(np.max(np.abs(np.asarray(ref)))), 1e-300)
            iv_err = max(iv_err, float(np.max(np.abs(np.asarray(got) - ref))) / scale)
        err = max(w_err, det_err, iv_err)
        worst = max(worst, err)
        if err > tol:
            failures += 1
    return PropertyResult(f"kernel-backend[{field}]", trials, failures,
                          f"{kernels.BACKEND}, max rel err {worst:.3e}")


def check_algebra(rng: np.random.Generator, trials: int) -> PropertyResult:
    from .quaternion import I, J, K, ONE, embed
    checks = 0
    failures = 0
    table = [
        (I * J, K), (J * I, -K), (J * K, I), (K * J, -I),
        (K * I, J), (I * K, -J), (I * I, -ONE), (J * J, -ONE), (K * K, -ONE),
    ]
    for got, want in table:
        checks += 1
        if got != want:
            failures += 1
    worst = 0.0
    for _ in range(trials):
        p, q, r = (Quaternion(*rng.uniform(-1.0, 1.0, size=4)) for _ in range(3))
        assoc = (p * q) * r - p * (q * r)
        anti = (p * q).conjugate() - q.conjugate() * p.conjugate()
        hom = np.max(np.abs(embed(p * q) - embed(p) @ embed(q)))
        err = max(max(abs(c) for c in assoc.components()),
                  max(abs(c) for c in anti.components()), float(hom))
        pi = p * p.inverse()
        err = max(err, max(abs(c) for c in (pi - ONE).components()))
        worst = max(worst, err)
        checks += 1
        if err > 1e-13:
            failures += 1
    return PropertyResult("quaternion-algebra", checks, failures,
                          f"max err {worst:.3e}")


def run_suite(seed: int = 42, trials: int = 200, sizes=None,
              fields=FIELDS, inject: str | None = None) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    sizes = tuple(sizes) if sizes else DEFAULT_SIZES
    results = [check_algebra(rng, trials)]
    for field in fields:
        results.append(check_matvec_oracle(rng, field, trials, sizes))
    for field in fields:
        if field in ("real", "complex"):
            results.append(check_det_oracle(rng, field, trials))
    if "quaternion" in fields:
        results.append(check_study_det(rng, trials))
    for field in fields:
        results.append(check_inverse(rng, field, trials))
    for field in fields:
        results.append(check_double_inverse(rng, field, trials))
    if "block" in fields:
        results.append(check_block_flatten(rng, trials))
        results.append(check_block_singular())
    results.append(check_sentinels(inject=inject))
    results.append(check_opcounts())
    for field in fields:
        if field in MATVEC_TOL:
            results.append(check_kernels(rng, field, max(1, trials // 4)))
    return results


def format_summary(results: list[PropertyResult]) -> str:
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{tag}  {r.name:<28} {r.checks - r.failures}/{r.checks} checks ok{detail}")
    total = sum(r.checks for r in results)
    bad = sum(r.failures for r in results)
    lines.append(f"{'OK' if bad == 0 else 'FAILED'}: {total - bad}/{total} checks passed")
    return "\n".join(lines)
