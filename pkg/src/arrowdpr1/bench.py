"""Timing and operation-count measurement for the generic structured path.

Times the object-level formulas (the array kernels have their own comparison
script under benchmarks/). Medians of repeated runs keep the records stable
enough for log-log slope fitting.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

import numpy as np

from .fastops import (arrow_det, arrow_inv, arrow_matvec, dpr1_det, dpr1_inv,
                      dpr1_matvec)
from .sampling import sample_arrow, sample_dpr1, sample_vector
from .scalars import CountingScalar
from .structured import ArrowMatrix, DPR1Matrix

OPERATIONS = ("arrow_matvec", "arrow_det", "arrow_inv",
              "dpr1_matvec", "dpr1_det", "dpr1_inv")

CSV_HEADER = ("operation", "field", "n", "ns_median", "scalar_ops")


@dataclass(frozen=True)
class BenchRecord:
    operation: str
    field: str
    n: int
    ns_median: int
    scalar_ops: int


def _wrap_counting(m):
    cs = CountingScalar
    if isinstance(m, ArrowMatrix):
        return ArrowMatrix([cs(s) for s in m.diag], [cs(s) for s in m.u],
                           [cs(s) for s in m.v], cs(m.alpha), tip=m.tip)
    return DPR1Matrix([cs(s) for s in m.diag], [cs(s) for s in m.x],
                      [cs(s) for s in m.y], cs(m.rho))


def _make_case(rng: np.random.Generator, operation: str, field: str, n: int):
    """Returns (timed thunk, counted thunk) for one instance."""
    kind, _, op = operation.partition("_")
    if kind == "arrow":
        m = sample_arrow(rng, n, field, conditioned=True)
        fn = {"matvec": arrow_matvec, "det": arrow_det, "inv": arrow_inv}[op]
    else:
        m = sample_dpr1(rng, n, field, conditioned=True)
        fn = {"matvec": dpr1_matvec, "det": dpr1_det, "inv": dpr1_inv}[op]
    mc = _wrap_counting(m)
    if op == "matvec":
        z = sample_vector(rng, n, field)
        zc = [CountingScalar(s) for s in z]
        return (lambda: fn(m, z)), (lambda: fn(mc, zc))
    return (lambda: fn(m)), (lambda: fn(mc))


def measure(rng: np.random.Generator, operation: str, field: str, n: int,
            runs: int = 5) -> BenchRecord:
    timed, counted = _make_case(rng, operation, field, n)
    timed()  # warm-up, discarded
    samples = []
    for _ in range(max(runs, 1)):
        t0 = time.perf_counter_ns()
        timed()
        samples.append(time.perf_counter_ns() - t0)
    CountingScalar.reset()
    counted()
    ops = CountingScalar.count()
    return BenchRecord(operation, field, n, int(np.median(samples)), ops)


def run_bench(sizes, fields, seed: int = 42, runs: int = 5,
              operations=OPERATIONS) -> list[BenchRecord]:
    rng = np.random.default_rng(seed)
    records = []
    for field in fields:
        for operation in operations:
            for n in sizes:
                records.append(measure(rng, operation, field, n, runs=runs))
    return records


def fit_exponent(pairs: list[tuple[int, int]]) -> float:
    """Least-squares slope of log(value) against log(n)."""
    ns = np.log([float(n) for n, _ in pairs])
    vals = np.log([max(float(v), 1.0) for _, v in pairs])
    slope, _ = np.polyfit(ns, vals, 1)
    return float(slope)


def series(records: list[BenchRecord]) -> dict[tuple[str, str], list[BenchRecord]]:
    """Group records by (operation, field), preserving size order."""
    out: dict[tuple[str, str], list[BenchRecord]] = {}
    for r in records:
        out.setdefault((r.operation, r.field), []).append(r)
    return out


def write_csv(path: str, records: list[BenchRecord]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow([r.operation, r.field, r.n, r.ns_median, r.scalar_ops])


def read_csv(path: str) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("unrecognized benchmark CSV header")
    return [BenchRecord(op, field, int(n), int(ns), int(ops))
            for op, field, n, ns, ops in rows[1:]]
