"""Calibrated timing of the solver kernels, with CSV output.

Each (instance, capacity, algorithm) cell runs the compiled kernel in a
repetition loop sized to hit a wall-time target, split into three batches
so a median is available next to the mean.  Solver invocations are the
only thing inside the timed region: array conversion, prefix-array
preprocessing and result checks happen outside, and the preprocessing
cost of the linear solvers is measured into its own column.  Every cell's
cost is re-priced from the extracted routes before a row is emitted.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, fields, replace

import numpy as np

from . import kernels
from .generate import capacity_sweep
from .model import (
    INF,
    Instance,
    extract_routes,
    recompute_cost,
    validate,
)

ALGORITHMS = ("bellman", "linear", "bellman-fleet", "linear-fleet",
              "bellman-soft", "bellman-soft-bounded", "linear-soft")

# (baseline, fast) pairs the companion speedup table is computed from
SPEEDUP_PAIRS = (("bellman", "linear"),
                 ("bellman-fleet", "linear-fleet"),
                 ("bellman-soft", "linear-soft"),
                 ("bellman-soft-bounded", "linear-soft"))

_warmed = False


def _ensure_warm():
    global _warmed
    if not _warmed:
        kernels.warm_up()
        _warmed = True


@dataclass(frozen=True)
class BenchRow:
    instance: str
    n: int
    Q: float
    algorithm: str
    alpha: float | None
    m: int | None
    reps: int | None
    total_time_s: float | None
    time_per_run_s: float | None
    time_per_run_median_s: float | None
    preprocess_time_s: float | None
    time_per_run_incl_s: float | None
    cost: float | None
    num_routes: int | None
    status: str


@dataclass(frozen=True)
class SpeedupRow:
    instance: str
    n: int
    Q: float
    baseline: str
    fast: str
    t_baseline_per_run_s: float
    t_fast_per_run_s: float
    speedup: float


def _mode_of(algorithm: str) -> str:
    return "soft" if "soft" in algorithm else "hard"


def _make_runner(algorithm: str, arrays, prefix, cap: float, alpha: float,
                 m: int | None, excess_bound: float):
    """Closure running one solver invocation on prebuilt arrays."""
    a = arrays
    if algorithm in ("bellman-fleet", "linear-fleet") and m is None:
        raise ValueError(f"{algorithm} needs a fleet size m")
    if algorithm == "bellman":
        return lambda: kernels.bellman_hard(
            a.demand, a.dist_prev, a.dist_from_depot, a.dist_to_depot, cap)
    if algorithm == "linear":
        cd, cl = prefix
        return lambda: kernels.linear_hard(
            cd, cl, a.dist_from_depot, a.dist_to_depot, cap)
    if algorithm == "bellman-fleet":
        return lambda: kernels.bellman_fleet(
            a.demand, a.dist_prev, a.dist_from_depot, a.dist_to_depot, cap, m)
    if algorithm == "linear-fleet":
        cd, cl = prefix
        return lambda: kernels.linear_fleet(
            cd, cl, a.dist_from_depot, a.dist_to_depot, cap, m)
    if algorithm == "bellman-soft":
        return lambda: kernels.bellman_soft(
            a.demand, a.dist_prev, a.dist_from_depot, a.dist_to_depot,
            cap, alpha, np.inf)
    if algorithm == "bellman-soft-bounded":
        bound = excess_bound * cap
        return lambda: kernels.bellman_soft(
            a.demand, a.dist_prev, a.dist_from_depot, a.dist_to_depot,
            cap, alpha, bound)
    if algorithm == "linear-soft":
        cd, cl = prefix
        return lambda: kernels.linear_soft(
            cd, cl, a.dist_from_depot, a.dist_to_depot, cap, alpha)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _estimate_per_run(fn) -> float:
    """Per-run seconds, doubling the loop until it is measurable."""
    k = 1
    while True:
        t0 = time.perf_counter()
        for _ in range(k):
            fn()
        dt = time.perf_counter() - t0
        if dt > 0.005 or k >= (1 << 20):
            return max(dt / k, 1e-9)
        k *= 2


def _fleet_cost_routes(p2, pred2, m: int, n: int):
    """Best cost over k <= m vehicles plus its route ranges."""
    if n == 0:
        return 0.0, ()
    best = INF
    best_k = 0
    for k in range(1, m + 1):
        if p2[k][n] < best:
            best = p2[k][n]
            best_k = k
    if best == INF:
        return INF, ()
    routes = []
    t = n
    for level in range(best_k, 0, -1):
        i = int(pred2[level][t])
        routes.append((i + 1, t))
        t = i
    routes.reverse()
    return float(best), tuple(routes)


def _solution_summary(algorithm: str, result, m: int | None, n: int):
    if algorithm in ("bellman-fleet", "linear-fleet"):
        p2, pred2 = result
        return _fleet_cost_routes(p2, pred2, m, n)
    p, pred = result
    cost = float(p[n])
    if cost == INF:
        return INF, ()
    return cost, extract_routes(pred, n)


def measure_cell(name: str, inst: Instance, Q: float, algorithm: str, *,
                 alpha: float | None = None, m: int | None = None,
                 excess_bound: float = 4.0, target_seconds: float = 2.0,
                 min_total_seconds: float = 0.05) -> BenchRow:
    """Time one solver on one instance at one capacity.

    Repetitions are calibrated to target_seconds, never fewer than 3 runs
    nor less than min_total_seconds of accumulated time, and run as three
    batches.  Raises if the solver's cost disagrees with an independent
    re-pricing of its routes.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    _ensure_warm()
    cap = float(Q)
    alpha_eff = inst.alpha if alpha is None else float(alpha)
    mode = _mode_of(algorithm)
    checked = replace(inst, capacity=cap, alpha=alpha_eff)
    validate(checked, mode).raise_if_invalid()

    arrays = kernels.InstanceArrays.from_instance(inst)
    t0 = time.perf_counter()
    prefix = kernels.prefix_arrays(arrays.demand, arrays.dist_prev)
    prefix_seconds = time.perf_counter() - t0
    # the classical baselines do not preprocess; only linear solvers pay this
    preprocess_time = prefix_seconds if algorithm.startswith("linear") else 0.0

    fn = _make_runner(algorithm, arrays, prefix, cap, alpha_eff, m,
                      excess_bound)
    result = fn()  # warm this code path; also the result we verify
    cost, routes = _solution_summary(algorithm, result, m, inst.n)
    if cost != INF:
        ref = recompute_cost(checked, routes, mode)
        if not math.isclose(cost, ref, rel_tol=1e-12, abs_tol=1e-9):
            raise RuntimeError(
                f"{algorithm} cost {cost} disagrees with re-priced routes "
                f"{ref} on {name} Q={Q}")

    est = _estimate_per_run(fn)
    runs_per_batch = max(1, math.ceil(target_seconds / 3.0 / est))
    runs_per_batch = max(runs_per_batch,
                         math.ceil(min_total_seconds / 3.0 / est))
    batch_times = []
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(runs_per_batch):
            fn()
        batch_times.append(time.perf_counter() - t0)
    reps = 3 * runs_per_batch
    total = sum(batch_times)
    per_run = total / reps
    per_run_median = sorted(bt / runs_per_batch for bt in batch_times)[1]

    return BenchRow(
        instance=name, n=inst.n, Q=cap, algorithm=algorithm,
        alpha=alpha_eff if mode == "soft" else None,
        m=m if "fleet" in algorithm else None,
        reps=reps, total_time_s=total, time_per_run_s=per_run,
        time_per_run_median_s=per_run_median,
        preprocess_time_s=preprocess_time,
        time_per_run_incl_s=per_run + preprocess_time,
        cost=cost, num_routes=len(routes),
        status="ok" if cost != INF else "infeasible",
    )


def skip_row(name: str, inst: Instance, Q: float) -> BenchRow:
    return BenchRow(instance=name, n=inst.n, Q=float(Q), algorithm="",
                    alpha=None, m=None, reps=None, total_time_s=None,
                    time_per_run_s=None, time_per_run_median_s=None,
                    preprocess_time_s=None, time_per_run_incl_s=None,
                    cost=None, num_routes=None,
                    status="skipped-capacity-covers-demand")


def run_suite(named_instances, capacities=None,
              algorithms=("bellman", "linear"), *,
              alpha: float | None = None, m: int | None = None,
              excess_bound: float = 4.0,
              target_seconds: float = 2.0) -> list:
    """Measure every (instance, capacity, algorithm) cell.

    capacities=None sweeps the standard grid per instance.  Cells whose
    capacity already covers the total demand are flagged and skipped, one
    row per pair.
    """
    rows = []
    for name, inst in named_instances:
        caps = capacity_sweep(inst.total_demand) if capacities is None \
            else capacities
        for Q in caps:
            if inst.total_demand <= Q:
                rows.append(skip_row(name, inst, Q))
                continue
            for algorithm in algorithms:
                rows.append(measure_cell(
                    name, inst, Q, algorithm, alpha=alpha, m=m,
                    excess_bound=excess_bound,
                    target_seconds=target_seconds))
    return rows


def speedup_rows(rows) -> list:
    """Companion table: baseline-over-fast per (instance, Q) cell."""
    cells = {}
    for row in rows:
        if row.status == "ok":
            cells.setdefault((row.instance, row.Q), {})[row.algorithm] = row
    out = []
    for (name, Q), by_algo in cells.items():
        for baseline, fast in SPEEDUP_PAIRS:
            if baseline in by_algo and fast in by_algo:
                rb, rf = by_algo[baseline], by_algo[fast]
                out.append(SpeedupRow(
                    instance=name, n=rb.n, Q=Q, baseline=baseline, fast=fast,
                    t_baseline_per_run_s=rb.time_per_run_s,
                    t_fast_per_run_s=rf.time_per_run_s,
                    speedup=rb.time_per_run_s / rf.time_per_run_s))
    return out


def _write_rows(rows, row_type, path):
    names = [f.name for f in fields(row_type)]
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(names)
        for row in rows:
            writer.writerow(["" if getattr(row, c) is None else getattr(row, c)
                             for c in names])


def write_bench_csv(rows, path) -> None:
    _write_rows(rows, BenchRow, path)


def write_speedup_csv(rows, path) -> None:
    _write_rows(rows, SpeedupRow, path)
