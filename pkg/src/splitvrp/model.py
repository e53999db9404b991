"""Core data model shared by all Split solvers.

Positions on the giant tour are numbered 1..n, the depot is 0.  All
per-customer arrays are stored padded to length n+1 so that index i means
"tour position i"; slot 0 is a placeholder.  A route is a contiguous range
(first, last) of tour positions served by one vehicle, leaving from and
returning to the depot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INF = math.inf


class SplitError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstanceError(SplitError, ValueError):
    """Instance failed validation for the requested solve mode."""


class RouteChainError(SplitError, ValueError):
    """Predecessor chain is malformed (not strictly decreasing to 0)."""


class ParseError(SplitError, ValueError):
    """A file could not be parsed; message carries the line number."""


class InvariantError(SplitError):
    """A runtime invariant check failed (verification builds only)."""


@dataclass(frozen=True)
class Instance:
    """A giant tour of n customers with the distances the Split graph needs.

    Arrays are padded to length n+1; index 0 is unused.  dist_prev[i] is the
    distance from tour position i-1 to position i (slot 1 is kept verbatim
    but never read by any cost formula).  Demands and distances must be
    nonnegative and finite; hard-capacity solvers additionally require every
    demand to fit in one vehicle (see validate()).
    """

    n: int
    demand: tuple
    dist_prev: tuple
    dist_from_depot: tuple
    dist_to_depot: tuple
    capacity: float
    alpha: float = 0.0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"customer count must be >= 0, got {self.n}")
        for name in ("demand", "dist_prev", "dist_from_depot", "dist_to_depot"):
            row = tuple(float(x) for x in getattr(self, name))
            if len(row) != self.n + 1:
                raise ValueError(
                    f"{name} must have length n+1={self.n + 1}, got {len(row)}"
                )
            object.__setattr__(self, name, row)
        object.__setattr__(self, "capacity", float(self.capacity))
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def total_demand(self) -> float:
        return sum(self.demand[1:])


def make_instance(demand, dist_prev, dist_from_depot, dist_to_depot,
                  capacity, alpha=0.0) -> Instance:
    """Build an Instance from customer-order rows.

    Each row has one entry per tour position, in tour order: entry k
    describes position k+1.  dist_prev's first entry fills the unused slot
    for position 1 and may hold any value.
    """
    rows = [tuple(demand), tuple(dist_prev), tuple(dist_from_depot),
            tuple(dist_to_depot)]
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("all rows must have the same length")
    pad = (0.0,)
    return Instance(
        n=n,
        demand=pad + rows[0],
        dist_prev=pad + rows[1],
        dist_from_depot=pad + rows[2],
        dist_to_depot=pad + rows[3],
        capacity=capacity,
        alpha=alpha,
    )


@dataclass(frozen=True)
class ValidationReport:
    """All violations found; empty means the instance is usable."""

    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self):
        if self.violations:
            raise InvalidInstanceError("; ".join(self.violations))


def validate(inst: Instance, mode: str = "hard") -> ValidationReport:
    """Check value-level invariants for the given solve mode.

    Hard mode additionally requires every demand to fit the vehicle
    capacity, otherwise no feasible split exists.  Soft mode admits any
    demand.  Structural problems (wrong array lengths) are rejected at
    construction time and are not re-checked here.
    """
    if mode not in ("hard", "soft"):
        raise ValueError(f"mode must be 'hard' or 'soft', got {mode!r}")
    bad = []
    if not (math.isfinite(inst.capacity) and inst.capacity > 0):
        bad.append(f"capacity must be positive and finite, got {inst.capacity}")
    if not (math.isfinite(inst.alpha) and inst.alpha >= 0):
        bad.append(f"alpha must be nonnegative and finite, got {inst.alpha}")
    for i in range(1, inst.n + 1):
        if not (math.isfinite(inst.demand[i]) and inst.demand[i] >= 0):
            bad.append(f"demand negative or non-finite at i={i}")
        elif mode == "hard" and inst.demand[i] > inst.capacity:
            bad.append(f"demand exceeds capacity at i={i}")
        if i >= 2 and not (math.isfinite(inst.dist_prev[i]) and inst.dist_prev[i] >= 0):
            bad.append(f"predecessor distance negative or non-finite at i={i}")
        if not (math.isfinite(inst.dist_from_depot[i]) and inst.dist_from_depot[i] >= 0):
            bad.append(f"depot-out distance negative or non-finite at i={i}")
        if not (math.isfinite(inst.dist_to_depot[i]) and inst.dist_to_depot[i] >= 0):
            bad.append(f"depot-return distance negative or non-finite at i={i}")
    return ValidationReport(tuple(bad))


@dataclass(frozen=True)
class Preprocessed:
    """Cumulative distance and load along the tour, built in one pass.

    cum_dist[i] is the tour distance from position 1 to position i
    (cum_dist[1] = 0); cum_load[i] is the demand of positions 1..i
    (cum_load[0] = 0).  Both are padded to length n+1.
    """

    cum_dist: tuple
    cum_load: tuple


def preprocess(inst: Instance) -> Preprocessed:
    """Compute the prefix arrays every arc-cost evaluation reads."""
    n = inst.n
    cum_dist = [0.0] * (n + 1)
    cum_load = [0.0] * (n + 1)
    for i in range(2, n + 1):
        cum_dist[i] = cum_dist[i - 1] + inst.dist_prev[i]
    for i in range(1, n + 1):
        cum_load[i] = cum_load[i - 1] + inst.demand[i]
    return Preprocessed(tuple(cum_dist), tuple(cum_load))


def _check_arc(n: int, i: int, j: int):
    if not (0 <= i < j <= n):
        raise IndexError(f"arc ({i},{j}) out of range for n={n}")


def arc_cost(pre: Preprocessed, inst: Instance, i: int, j: int) -> float:
    """Cost of the route serving positions i+1..j: depot out, along the
    tour, and back to the depot."""
    _check_arc(inst.n, i, j)
    return (inst.dist_from_depot[i + 1]
            + pre.cum_dist[j] - pre.cum_dist[i + 1]
            + inst.dist_to_depot[j])


def arc_feasible(pre: Preprocessed, capacity: float, i: int, j: int) -> bool:
    """True iff the load of positions i+1..j fits in one vehicle."""
    n = len(pre.cum_load) - 1
    _check_arc(n, i, j)
    return pre.cum_load[j] - pre.cum_load[i] <= capacity


def soft_arc_cost(pre: Preprocessed, inst: Instance, i: int, j: int) -> float:
    """arc_cost plus a linear penalty for any load above capacity; every
    arc exists in soft mode."""
    over = pre.cum_load[j] - pre.cum_load[i] - inst.capacity
    base = arc_cost(pre, inst, i, j)
    return base + inst.alpha * over if over > 0 else base


def extract_routes(pred, n: int):
    """Walk the predecessor chain from n back to 0 and emit the route
    ranges in tour order.

    Raises RouteChainError if the chain does not strictly decrease to 0,
    which signals corrupted solver state.
    """
    if n == 0:
        return ()
    routes = []
    t = n
    while t > 0:
        i = pred[t]
        if not 0 <= i < t:
            raise RouteChainError(f"pred[{t}]={i} does not decrease toward 0")
        routes.append((i + 1, t))
        t = i
    routes.reverse()
    return tuple(routes)


def recompute_cost(inst: Instance, routes, mode: str = "hard") -> float:
    """Re-price a solution from scratch, summing each route directly.

    Deliberately avoids the solver labels and the prefix arrays so it can
    serve as an independent check.  Hard mode returns infinity if any route
    overloads; soft mode prices the overload at alpha per unit.
    """
    if mode not in ("hard", "soft"):
        raise ValueError(f"mode must be 'hard' or 'soft', got {mode!r}")
    expected_first = 1
    for first, last in routes:
        if first != expected_first or last < first or last > inst.n:
            raise ValueError(
                f"routes do not partition 1..{inst.n}: bad range ({first},{last})"
            )
        expected_first = last + 1
    if expected_first != inst.n + 1:
        raise ValueError(
            f"routes do not partition 1..{inst.n}: stop at {expected_first - 1}"
        )
    total = 0.0
    for first, last in routes:
        cost = inst.dist_from_depot[first]
        load = inst.demand[first]
        for i in range(first + 1, last + 1):
            cost += inst.dist_prev[i]
            load += inst.demand[i]
        cost += inst.dist_to_depot[last]
        over = load - inst.capacity
        if over > 0:
            if mode == "hard":
                return INF
            cost += inst.alpha * over
        total += cost
    return total


@dataclass(frozen=True)
class DequeStats:
    """Operation counters from one predecessor-queue run."""

    pushes: int = 0
    front_pops: int = 0
    back_pops: int = 0

    @property
    def pops(self) -> int:
        return self.front_pops + self.back_pops


@dataclass(frozen=True)
class SplitSolution:
    """Result of a single-level Split solve.

    labels[t] is the cheapest cost of serving positions 1..t with complete
    routes (infinity when unreachable); pred[t] the chosen predecessor.
    routes partition 1..n into contiguous ranges in tour order.
    """

    labels: tuple
    pred: tuple
    routes: tuple
    cost: float
    status: str  # "feasible" | "infeasible"
    deque_stats: DequeStats | None = None

    @property
    def num_routes(self) -> int:
        return len(self.routes)


@dataclass(frozen=True)
class FleetSolution:
    """Result of a fleet-limited Split solve.

    labels[k][t] is the cheapest cost of serving positions 1..t with
    exactly k routes (infinity when unreachable), for k in 0..levels.
    """

    levels: int
    labels: tuple
    pred: tuple
    deque_stats: tuple | None = None  # one DequeStats per level, linear solver only

    @property
    def per_k_cost(self) -> tuple:
        """labels[k][n] for k in 1..levels."""
        return tuple(self.labels[k][-1] for k in range(1, self.levels + 1))


def solution_from_labels(inst: Instance, labels, pred,
                         deque_stats: DequeStats | None = None) -> SplitSolution:
    """Assemble a SplitSolution, extracting routes when the chain is complete."""
    cost = labels[inst.n]
    if cost == INF:
        return SplitSolution(tuple(labels), tuple(pred), (), INF,
                             "infeasible", deque_stats)
    routes = extract_routes(pred, inst.n)
    return SplitSolution(tuple(labels), tuple(pred), routes, cost,
                         "feasible", deque_stats)


def extract_fleet_routes(fs: FleetSolution, k: int, n: int | None = None):
    """Trace the 2-D predecessor table back from level k and emit exactly k
    contiguous routes covering 1..n."""
    if n is None:
        n = len(fs.labels[0]) - 1
    if k == 0 and n == 0:
        return ()
    if not 1 <= k <= fs.levels:
        raise ValueError(f"k={k} outside 1..{fs.levels}")
    if fs.labels[k][n] == INF:
        raise ValueError(f"no solution with exactly {k} routes")
    routes = []
    t = n
    for level in range(k, 0, -1):
        i = fs.pred[level][t]
        if not 0 <= i < t:
            raise RouteChainError(f"pred[{level}][{t}]={i} does not decrease")
        routes.append((i + 1, t))
        t = i
    if t != 0:
        raise RouteChainError(f"trace-back from level {k} stopped at {t}, not 0")
    routes.reverse()
    return tuple(routes)
