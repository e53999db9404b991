"""Command-line front end: solve, verify, bench, gen.

Exit codes: 0 success, 1 infeasible, 2 input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path

from . import bench as bench_mod
from .bellman import bellman_split
from .fleet import best_with_at_most, linear_split_fleet
from .generate import (
    CAPACITY_GRID,
    build_instance,
    choose_depot,
    gen_random,
    load_points,
    load_tour,
)
from .instance_io import fmt_number, read_instance, write_instance
from .linear import linear_split
from .model import InvalidInstanceError, ParseError, extract_fleet_routes, validate
from .soft import linear_split_soft
from .verify import run_verification

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_VERIFY_FAILED = 3


def _parse_capacities(text: str | None):
    if text is None:
        return None
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ParseError(f"bad capacity list {text!r}") from None
    if not values or any(v <= 0 for v in values):
        raise ParseError(f"capacities must be positive, got {text!r}")
    return values


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    if args.capacity is not None:
        inst = replace(inst, capacity=args.capacity)
    if args.alpha is not None:
        inst = replace(inst, alpha=args.alpha)

    mode = "soft" if args.algorithm == "soft" else "hard"
    report = validate(inst, mode)
    if not report.ok:
        for v in report.violations:
            print(f"invalid: {v}", file=sys.stderr)
        capacity_only = all("exceeds capacity" in v for v in report.violations)
        return EXIT_INFEASIBLE if capacity_only else EXIT_INPUT_ERROR

    if args.algorithm == "fleet":
        if args.fleet is None:
            print("error: --fleet M is required with --algorithm fleet",
                  file=sys.stderr)
            return EXIT_INPUT_ERROR
        fs = linear_split_fleet(inst, args.fleet)
        k, cost = best_with_at_most(fs, args.fleet)
        if k is None:
            print("status: infeasible")
            return EXIT_INFEASIBLE
        routes = extract_fleet_routes(fs, k) if k else ()
        print("status: feasible")
        print(f"cost: {fmt_number(cost)}")
        print(f"routes: {len(routes)}")
        for idx, (a, b) in enumerate(routes, 1):
            print(f"route {idx}: {a}..{b}")
        if args.labels:
            print("cost-by-fleet-size: "
                  + " ".join(fmt_number(c) for c in fs.per_k_cost))
        return EXIT_OK

    solver = {"bellman": bellman_split, "linear": linear_split,
              "soft": linear_split_soft}[args.algorithm]
    sol = solver(inst)
    if sol.status != "feasible":
        print("status: infeasible")
        return EXIT_INFEASIBLE
    print("status: feasible")
    print(f"cost: {fmt_number(sol.cost)}")
    print(f"routes: {sol.num_routes}")
    for idx, (a, b) in enumerate(sol.routes, 1):
        print(f"route {idx}: {a}..{b}")
    if args.labels:
        print("labels: " + " ".join(fmt_number(x) for x in sol.labels))
    return EXIT_OK


def cmd_verify(args) -> int:
    modes = tuple(tok.strip() for tok in args.modes.split(",") if tok.strip())
    result = run_verification(args.count, args.max_n, args.seed, modes)
    for mode in modes:
        print(f"{mode}: {result.per_mode.get(mode, 0)} cases")
    if result.failures:
        first = result.failures[0]
        out = Path(args.output_dir) / f"counterexample-{first.mode}.split"
        write_instance(first.instance, out)
        print(f"FAIL ({len(result.failures)} of {result.checked}): "
              f"{first.mode} case {first.case} {first.params}: {first.detail}",
              file=sys.stderr)
        print(f"counterexample written to {out}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    print(f"PASS: {result.checked} comparisons")
    return EXIT_OK


def cmd_bench(args) -> int:
    named = []
    for path in args.instance or ():
        named.append((Path(path).stem, read_instance(path)))
    if args.random is not None:
        named.append((f"random{args.random}",
                      gen_random(args.random, args.seed)))
    if not named:
        print("error: give at least one --instance file or --random N",
              file=sys.stderr)
        return EXIT_INPUT_ERROR
    algorithms = tuple(tok.strip() for tok in args.algorithms.split(",")
                       if tok.strip())
    for algo in algorithms:
        if algo not in bench_mod.ALGORITHMS:
            print(f"error: unknown algorithm {algo!r}; choose from "
                  f"{', '.join(bench_mod.ALGORITHMS)}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        if "fleet" in algo and args.fleet is None:
            print(f"error: --fleet M is required for {algo}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    rows = bench_mod.run_suite(
        named, _parse_capacities(args.capacities), algorithms,
        alpha=args.alpha, m=args.fleet, excess_bound=args.excess_multiplier,
        target_seconds=args.target_seconds)
    bench_mod.write_bench_csv(rows, args.output)
    print(f"wrote {len(rows)} rows to {args.output}")
    s_rows = bench_mod.speedup_rows(rows)
    s_path = args.speedup_output
    if s_path is None:
        out = Path(args.output)
        s_path = out.with_name(out.stem + "_speedup.csv")
    bench_mod.write_speedup_csv(s_rows, s_path)
    print(f"wrote {len(s_rows)} speedup rows to {s_path}")
    return EXIT_OK


def cmd_gen(args) -> int:
    points = load_points(args.points)
    tour = load_tour(args.tour)
    depot = choose_depot(points)
    capacities = _parse_capacities(args.capacities) or CAPACITY_GRID
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = Path(args.points).stem

    # demands are drawn once per instance; capacity only relabels the file
    base = build_instance(points, tour, depot, capacity=1.0,
                          alpha=args.alpha, seed=args.seed)
    total = base.total_demand
    manifest = []
    written = 0
    for Q in capacities:
        if total <= Q:
            manifest.append([name, "", base.n, fmt_number(Q), fmt_number(args.alpha),
                             args.seed, fmt_number(total),
                             "skipped-capacity-covers-demand"])
            continue
        fname = f"{name}_Q{fmt_number(Q)}.split"
        write_instance(replace(base, capacity=Q), out_dir / fname)
        manifest.append([name, fname, base.n, fmt_number(Q), fmt_number(args.alpha),
                         args.seed, fmt_number(total), "written"])
        written += 1
    with open(out_dir / "manifest.csv", "w", newline="",
              encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["name", "file", "n", "Q", "alpha", "seed",
                         "total_demand", "status"])
        writer.writerows(manifest)
    print(f"depot: node {depot}")
    print(f"wrote {written} instance files and manifest.csv to {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitvrp",
        description="Split a giant tour into capacitated vehicle routes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("instance", help="instance file (SPLIT 1 format)")
    p.add_argument("--algorithm", default="linear",
                   choices=("bellman", "linear", "fleet", "soft"))
    p.add_argument("--fleet", type=int, help="vehicle limit (fleet mode)")
    p.add_argument("--alpha", type=float, help="override overload penalty")
    p.add_argument("--capacity", type=float, help="override vehicle capacity")
    p.add_argument("--labels", action="store_true",
                   help="also print the label row")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify",
                       help="cross-check solvers on random instances")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--modes", default="hard,fleet,soft")
    p.add_argument("--output-dir", default=".",
                   help="where to write a counterexample on failure")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="calibrated timing comparison to CSV")
    p.add_argument("--instance", action="append",
                   help="instance file; repeatable")
    p.add_argument("--random", type=int, metavar="N",
                   help="also bench a random instance of N customers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--capacities",
                   help="comma list; default: standard grid below the "
                        "total demand")
    p.add_argument("--algorithms", default="bellman,linear",
                   help=f"comma list from: {', '.join(bench_mod.ALGORITHMS)}")
    p.add_argument("--alpha", type=float, help="overload penalty (soft)")
    p.add_argument("--fleet", type=int, help="vehicle limit (fleet)")
    p.add_argument("--excess-multiplier", type=float, default=4.0,
                   help="load bound multiplier for bellman-soft-bounded")
    p.add_argument("--target-seconds", type=float, default=2.0,
                   help="wall-time target per cell")
    p.add_argument("--output", default="bench.csv")
    p.add_argument("--speedup-output",
                   help="companion speedup CSV (default: <output>_speedup.csv)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen",
                       help="build instance files from points and a tour")
    p.add_argument("--points", required=True,
                   help="TSPLIB coordinate file (EUC_2D)")
    p.add_argument("--tour", required=True,
                   help="tour file: whitespace-separated ids, EOF or -1 "
                        "terminated")
    p.add_argument("--capacities", help="comma list; default: standard grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--output", required=True, help="output directory")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInstanceError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entry():
    raise SystemExit(main())
