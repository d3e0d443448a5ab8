"""Command-line interface.

Exit codes: 0 success, 1 failed oracle check, 2 usage error, 3 data error,
4 solver capacity error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

import numpy as np

from . import __version__
from .agree import DEFAULT_TOLERANCE, agreement_score
from .baseline import equal_frequency, equal_width
from .core import Objective, series_from_arrays
from .errors import ImpactDiscError
from .io import SynthSpec, dump_json, generate, read_csv, write_result, write_series_csv
from .solver import DEFAULT_ENUMERATION_CAP, brute_force_partition, cost_curve, optimal_partition


def _floats(text: str) -> list[float]:
    text = text.strip()
    if not text:
        return []
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _column(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def _add_input(p):
    p.add_argument("--input", required=True, help="CSV file")
    p.add_argument("--x-col", required=True, type=_column, help="header name or 0-based index")
    p.add_argument("--y-col", required=True, type=_column, help="header name or 0-based index")
    p.add_argument("--max-rows", type=int, default=None, help="keep only the first N data rows")


def _load(args):
    series, report = read_csv(args.input, args.x_col, args.y_col, args.max_rows)
    if report.rows_skipped:
        print(f"skipped {report.rows_skipped} of {report.rows_read} rows", file=sys.stderr)
    return series


def cmd_discretize(args):
    series = _load(args)
    if args.method == "brute":
        result = brute_force_partition(series, args.k, args.objective, cap=args.cap)
    else:
        result = optimal_partition(series, args.k, args.objective)
    write_result(result, args.format, args.output)
    return 0


def cmd_curve(args):
    series = _load(args)
    curve = cost_curve(series, args.k_max, args.objective)
    dump_json({"objective": args.objective.value,
               "curve": [{"k": k, "cost": c} for k, c in curve]}, args.output)
    return 0


def cmd_baseline(args):
    series = _load(args)
    fn = equal_width if args.method == "equal-width" else equal_frequency
    dump_json(dataclasses.asdict(fn(series, args.k)), args.output)
    return 0


def cmd_compare(args):
    report = agreement_score(args.cuts_a, args.cuts_b, args.tolerance)
    dump_json(dataclasses.asdict(report), args.output)
    return 0


def cmd_synth(args):
    spec = SynthSpec(
        family=args.family, n=args.n, levels=tuple(args.levels or ()),
        slope=args.slope, intercept=args.intercept,
        noise_sd=args.noise_sd, seed=args.seed,
    )
    write_series_csv(generate(spec), args.out)
    return 0


def oracle_check(n: int, k: int, trials: int, seed: int) -> dict:
    """Compare DP and brute force on seeded random series of length n."""
    rng = np.random.default_rng(seed)
    failures = []
    for t in range(trials):
        x = np.sort(rng.uniform(0, 100, n))
        y = rng.uniform(0, 100, n)
        series = series_from_arrays(x, y)
        for obj in Objective:
            dp = optimal_partition(series, k, obj)
            bf = brute_force_partition(series, k, obj)
            rel = abs(dp.total_cost - bf.total_cost) / max(abs(bf.total_cost), 1e-300)
            ok = dp.cuts == bf.cuts and (rel <= 1e-9 or dp.total_cost == bf.total_cost)
            if not ok:
                failures.append({"trial": t, "objective": obj.value, "dp_cuts": list(dp.cuts),
                                 "brute_cuts": list(bf.cuts), "dp_cost": dp.total_cost,
                                 "brute_cost": bf.total_cost})
    return {"n": n, "k": k, "trials": trials, "seed": seed,
            "passed": not failures, "failures": failures}


def cmd_oracle_check(args):
    report = oracle_check(args.n, args.k, args.trials, args.seed)
    dump_json(report, args.output)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="impactdisc",
        description="Exact impact-driven discretization of a numerical attribute.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discretize", help="optimal k-partitioning of a CSV column pair")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", type=Objective.parse, default=Objective.LSQM,
                   choices=list(Objective), metavar="{lsqm,ladm}")
    p.add_argument("--method", choices=["dp", "brute"], default="dp")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="maximum candidates for --method brute")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_discretize)

    p = sub.add_parser("curve", help="optimal cost for k = 1..k-max")
    _add_input(p)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--objective", type=Objective.parse, default=Objective.LSQM,
                   choices=list(Objective), metavar="{lsqm,ladm}")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("baseline", help="equal-width or equal-frequency bins")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["equal-width", "equal-frequency"], required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("compare", help="agreement between two cut-point sets")
    p.add_argument("--cuts-a", type=_floats, required=True)
    p.add_argument("--cuts-b", type=_floats, required=True)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("synth", help="write a synthetic series as CSV")
    p.add_argument("--family", choices=["step", "linear", "constant_noise"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--levels", type=_floats, default=None)
    p.add_argument("--slope", type=float, default=1.0)
    p.add_argument("--intercept", type=float, default=0.0)
    p.add_argument("--noise-sd", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("oracle-check", help="DP versus brute force on random series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ImpactDiscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
