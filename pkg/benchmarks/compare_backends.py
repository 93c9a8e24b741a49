#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback on identical inputs.

Both backends are imported directly, so the comparison ignores the
ARROWDPR1_BACKEND selection and always measures the two implementations
side by side. The first numba call per signature includes compilation; a
warm-up run absorbs it before timing.
"""

import argparse
import statistics
import time

import numpy as np

from arrowdpr1.kernels import (arrow_arrays, backend_numba, backend_numpy,
                               dpr1_arrays, quaternion_array)
from arrowdpr1.sampling import sample_arrow, sample_dpr1, sample_vector

OPS = ("arrow_matvec", "arrow_det", "arrow_inv",
       "dpr1_matvec", "dpr1_det", "dpr1_inv")


def _median_ns(fn, runs: int) -> int:
    fn()  # warm-up; compiles on the numba side
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def _calls(backend, op: str, field: str, rng, n: int):
    kind, _, name = op.partition("_")
    quat = field == "quaternion"
    suffix = "_q" if quat else ""
    fn = getattr(backend, f"{op}{suffix}")
    if kind == "arrow":
        d, u, v, alpha, tip = arrow_arrays(sample_arrow(rng, n, field, conditioned=True))
        args = [d, u, v, alpha]
        if name in ("matvec", "inv"):
            args.append(tip)
    else:
        d, x, y, rho = dpr1_arrays(sample_dpr1(rng, n, field, conditioned=True))
        args = [d, x, y, rho]
    if name == "matvec":
        z = sample_vector(rng, n, field)
        args.append(quaternion_array(z) if quat else np.asarray(z, dtype=d.dtype))
    return lambda: fn(*args)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,4000,16000",
                    help="comma-separated instance sizes")
    ap.add_argument("--fields", default="real,complex,quaternion")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--runs", type=int, default=9)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    fields = [f.strip() for f in args.fields.split(",") if f.strip()]

    print(f"{'operation':<14} {'field':<10} {'n':>6} {'numpy ns':>12} "
          f"{'numba ns':>12} {'speedup':>8}")
    for field in fields:
        for op in OPS:
            for n in sizes:
                rng = np.random.default_rng(args.seed)
                np_call = _calls(backend_numpy, op, field, rng, n)
                rng = np.random.default_rng(args.seed)
                nb_call = _calls(backend_numba, op, field, rng, n)
                t_np = _median_ns(np_call, args.runs)
                t_nb = _median_ns(nb_call, args.runs)
                print(f"{op:<14} {field:<10} {n:>6} {t_np:>12} {t_nb:>12} "
                      f"{t_np / max(t_nb, 1):>8.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
