"""Command line front end: compute, verify, bench."""

from __future__ import annotations

import argparse
import json
import sys

from .bench import CSV_HEADER, fit_exponent, run_bench, series, write_csv
from .errors import (DimensionError, MatrixFileError, SingularMatrixError,
                     SingularScalarError, StructureNotRepresentableError)
from .fastops import arrow_det, arrow_inv, arrow_matvec, dpr1_det, dpr1_inv, dpr1_matvec
from .io import encode_scalar, load_matrix, load_vector, serialize_matrix, serialize_vector
from .sampling import FIELDS
from .structured import ArrowMatrix
from .verify import format_summary, run_suite
from .fastops import SWAP_SITES


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    return sizes


def _parse_fields(text: str) -> list[str]:
    fields = [part.strip() for part in text.split(",") if part.strip()]
    for f in fields:
        if f not in FIELDS:
            raise argparse.ArgumentTypeError(
                f"unknown field {f!r}, expected one of {', '.join(FIELDS)}")
    return fields


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrowdpr1",
        description="Linear-time operations on arrowhead and "
                    "diagonal-plus-rank-one matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="run one operation on a matrix file")
    pc.add_argument("--in", dest="infile", required=True, metavar="FILE")
    pc.add_argument("--op", required=True, choices=("det", "inv", "matvec"))
    pc.add_argument("--vec", metavar="FILE", help="vector file, matvec only")
    pc.add_argument("--tol", type=float, default=0.0,
                    help="magnitude at or below which a scalar counts as zero")

    pv = sub.add_parser("verify", help="run the randomized property suite")
    pv.add_argument("--seed", type=int, default=42)
    pv.add_argument("--trials", type=int, default=200)
    pv.add_argument("--sizes", type=_parse_sizes, default=None)
    pv.add_argument("--fields", type=_parse_fields, default=list(FIELDS))
    pv.add_argument("--inject-order-bug", choices=SWAP_SITES,
                    help=argparse.SUPPRESS)

    pb = sub.add_parser("bench", help="time operations and write a CSV")
    pb.add_argument("--sizes", type=_parse_sizes, required=True)
    pb.add_argument("--fields", type=_parse_fields, required=True)
    pb.add_argument("--out", required=True, metavar="FILE.csv")
    pb.add_argument("--seed", type=int, default=42)
    pb.add_argument("--runs", type=int, default=5)
    return parser


def cmd_compute(args) -> int:
    m = load_matrix(args.infile)
    arrow = isinstance(m, ArrowMatrix)
    if args.op == "matvec":
        if not args.vec:
            print("error: --vec is required for matvec", file=sys.stderr)
            return 2
        z = load_vector(args.vec, like=m)
        w = (arrow_matvec if arrow else dpr1_matvec)(m, z)
        print(json.dumps(serialize_vector(w)))
        return 0
    if args.op == "det":
        res = (arrow_det if arrow else dpr1_det)(m, tol=args.tol)
        if res.value is None:
            print(json.dumps(res.magnitude))
        else:
            print(json.dumps(encode_scalar(res.value)))
        return 0
    inv_m = (arrow_inv if arrow else dpr1_inv)(m, tol=args.tol)
    print(json.dumps(serialize_matrix(inv_m)))
    return 0


def cmd_verify(args) -> int:
    if args.trials == 0:
        print("warning: --trials 0, nothing checked", file=sys.stderr)
        print("OK: 0/0 checks passed")
        return 0
    if args.trials < 0:
        print("error: --trials must be nonnegative", file=sys.stderr)
        return 2
    results = run_suite(seed=args.seed, trials=args.trials, sizes=args.sizes,
                        fields=tuple(args.fields),
                        inject=args.inject_order_bug)
    print(format_summary(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_bench(args) -> int:
    if not args.sizes:
        print("error: --sizes must name at least one size", file=sys.stderr)
        return 2
    if sorted(args.sizes) != args.sizes:
        print("error: --sizes must be ascending", file=sys.stderr)
        return 2
    records = run_bench(args.sizes, args.fields, seed=args.seed, runs=args.runs)
    write_csv(args.out, records)
    for (operation, field), recs in series(records).items():
        if len(recs) >= 2:
            exp = fit_exponent([(r.n, r.ns_median) for r in recs])
            print(f"{operation}/{field}: time exponent {exp:.2f}")
        else:
            print(f"{operation}/{field}: 1 size, no exponent")
    print(f"wrote {len(records)} records ({','.join(CSV_HEADER)}) to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else int(e.code)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_bench(args)
    except (MatrixFileError, DimensionError, json.JSONDecodeError,
            FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except StructureNotRepresentableError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except (SingularMatrixError, SingularScalarError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
