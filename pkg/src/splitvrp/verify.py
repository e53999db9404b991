"""Randomized cross-checking of the fast solvers against the baselines.

Each case draws a seeded random instance and requires exact agreement of
label tables and costs between the linear solver, the classical baseline
and the brute-force oracle (and their fleet/soft counterparts).  The
solver set is injectable so the harness itself can be tested against a
deliberately broken solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bellman import (
    bellman_split,
    bellman_split_fleet,
    bellman_split_soft,
    oracle_shortest_path,
)
from .fleet import best_with_at_most, linear_split_fleet
from .generate import SplitMix64, gen_random
from .linear import linear_split
from .model import Instance, recompute_cost
from .soft import linear_split_soft

HARD_CAPACITIES = (60.0, 100.0, 200.0, 500.0, 1000.0, 1600.0)
SOFT_ALPHAS = (0.0, 0.5, 1.0, 2.0, 10.0, 1000.0)


@dataclass(frozen=True)
class SolverSet:
    """Solvers under comparison, all called as f(inst) or f(inst, m);
    swap entries to test the harness itself."""

    linear: object
    bellman: object
    oracle: object
    linear_fleet: object
    bellman_fleet: object
    linear_soft: object
    bellman_soft: object


def default_solvers(check_invariants: bool = True) -> SolverSet:
    return SolverSet(
        linear=lambda inst: linear_split(inst,
                                         check_invariants=check_invariants),
        bellman=bellman_split,
        oracle=lambda inst: oracle_shortest_path(inst, "hard"),
        linear_fleet=lambda inst, m: linear_split_fleet(
            inst, m, check_invariants=check_invariants),
        bellman_fleet=bellman_split_fleet,
        linear_soft=lambda inst: linear_split_soft(
            inst, check_invariants=check_invariants),
        bellman_soft=bellman_split_soft,
    )


@dataclass(frozen=True)
class VerifyFailure:
    mode: str
    case: int
    detail: str
    instance: Instance
    params: dict


@dataclass
class VerifyResult:
    checked: int = 0
    per_mode: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_hard(inst, solvers):
    lin = solvers.linear(inst)
    bell = solvers.bellman(inst)
    orc = solvers.oracle(inst)
    if tuple(lin.labels) != tuple(bell.labels):
        return f"linear labels differ from bellman: {lin.cost} vs {bell.cost}"
    if tuple(bell.labels) != tuple(orc.labels):
        return f"bellman labels differ from oracle: {bell.cost} vs {orc.cost}"
    for name, sol in (("linear", lin), ("bellman", bell)):
        if sol.status == "feasible":
            ref = recompute_cost(inst, sol.routes, "hard")
            if ref != sol.cost:
                return f"{name} routes re-price to {ref}, label says {sol.cost}"
    return None


def _check_fleet(inst, m, solvers):
    lf = solvers.linear_fleet(inst, m)
    bf = solvers.bellman_fleet(inst, m)
    if tuple(map(tuple, lf.labels)) != tuple(map(tuple, bf.labels)):
        return f"fleet label tables differ at m={m}"
    unlimited = solvers.linear(inst)
    if unlimited.status == "feasible" and m >= unlimited.num_routes:
        _, cost = best_with_at_most(lf, m)
        if cost != unlimited.cost:
            return (f"best_with_at_most({m}) = {cost} but unlimited split "
                    f"uses {unlimited.num_routes} routes at {unlimited.cost}")
    return None


def _check_soft(inst, solvers):
    lin = solvers.linear_soft(inst)
    bell = solvers.bellman_soft(inst)
    if tuple(lin.labels) != tuple(bell.labels):
        return (f"soft labels differ at alpha={inst.alpha}: "
                f"{lin.cost} vs {bell.cost}")
    ref = recompute_cost(inst, lin.routes, "soft")
    if ref != lin.cost:
        return f"soft routes re-price to {ref}, label says {lin.cost}"
    return None


def run_verification(count: int, max_n: int, seed: int,
                     modes=("hard", "fleet", "soft"),
                     solvers: SolverSet | None = None,
                     check_invariants: bool = True,
                     stop_on_first: bool = False) -> VerifyResult:
    """Run count random cases per requested mode; count=0 passes vacuously."""
    for mode in modes:
        if mode not in ("hard", "fleet", "soft"):
            raise ValueError(f"unknown mode {mode!r}")
    if solvers is None:
        solvers = default_solvers(check_invariants)
    rng = SplitMix64(seed)
    result = VerifyResult()
    for case in range(count):
        n = rng.randint(0, max_n)
        case_seed = rng.next_u64()
        cap = HARD_CAPACITIES[case % len(HARD_CAPACITIES)]
        alpha = SOFT_ALPHAS[case % len(SOFT_ALPHAS)]
        for mode in modes:
            if mode == "hard":
                inst = gen_random(n, case_seed, capacity=cap)
                params = {"n": n, "Q": cap}
                detail = _check_hard(inst, solvers)
            elif mode == "fleet":
                m = 1 + case % 8
                inst = gen_random(n, case_seed, capacity=cap)
                params = {"n": n, "Q": cap, "m": m}
                detail = _check_fleet(inst, m, solvers)
            else:
                inst = gen_random(n, case_seed, capacity=cap, alpha=alpha,
                                  mode="soft")
                params = {"n": n, "Q": cap, "alpha": alpha}
                detail = _check_soft(inst, solvers)
            result.checked += 1
            result.per_mode[mode] = result.per_mode.get(mode, 0) + 1
            if detail is not None:
                result.failures.append(VerifyFailure(
                    mode, case, detail, inst, params))
                if stop_on_first:
                    return result
    return result
