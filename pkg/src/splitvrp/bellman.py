"""Reference Split solvers: label propagation over successor scans.

These are the baselines the linear solvers are measured against and the
brute-force oracle used for acceptance testing.  The classical solver
computes edge costs directly in the inner loop, without prefix arrays; the
oracle scans every predecessor of every node with no early exit.
"""

from __future__ import annotations

from .model import (
    INF,
    FleetSolution,
    Instance,
    SplitSolution,
    solution_from_labels,
    validate,
)


def bellman_split(inst: Instance) -> SplitSolution:
    """Classical hard-capacity Split.

    For each node, extends its label forward while the accumulated load
    fits the capacity, relaxing successor labels.  O(nB) with B the
    capacity-implied bound on customers per route.  Returns an infeasible
    solution when some position cannot be reached (a demand above
    capacity); no exception is raised.
    """
    n = inst.n
    if n == 0:
        return SplitSolution((0.0,), (0,), (), 0.0, "feasible")
    q = inst.demand
    d_prev = inst.dist_prev
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity

    p = [INF] * (n + 1)
    pred = [0] * (n + 1)
    p[0] = 0.0
    for t in range(n):
        pt = p[t]
        load = 0.0
        dist = 0.0
        i = t + 1
        while i <= n and load <= cap:
            load += q[i]
            if i == t + 1:
                dist = d_from[i]
            else:
                dist += d_prev[i]
            # relaxation is guarded: the arc exists only if the route fits
            if load <= cap:
                c = pt + dist + d_to[i]
                if c < p[i]:
                    p[i] = c
                    pred[i] = t
            i += 1
    return solution_from_labels(inst, p, pred)


def bellman_split_fleet(inst: Instance, m: int) -> FleetSolution:
    """Hard-capacity Split with at most m vehicles, by level iteration.

    labels[k][t] is the cheapest cover of 1..t with exactly k routes;
    unreachable states stay infinite.  O(nmB).  Fleet infeasibility shows
    up as an all-infinite final column, never as an exception.
    """
    if m < 1:
        raise ValueError(f"vehicle count must be >= 1, got {m}")
    n = inst.n
    q = inst.demand
    d_prev = inst.dist_prev
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity

    p2 = [[INF] * (n + 1) for _ in range(m + 1)]
    pred2 = [[0] * (n + 1) for _ in range(m + 1)]
    p2[0][0] = 0.0
    for k in range(m):
        pk = p2[k]
        pk1 = p2[k + 1]
        predk1 = pred2[k + 1]
        for t in range(k, n):
            pt = pk[t]
            if pt == INF:
                continue
            load = 0.0
            dist = 0.0
            i = t + 1
            while i <= n and load <= cap:
                load += q[i]
                if i == t + 1:
                    dist = d_from[i]
                else:
                    dist += d_prev[i]
                if load <= cap:
                    c = pt + dist + d_to[i]
                    if c < pk1[i]:
                        pk1[i] = c
                        predk1[i] = t
                i += 1
    return FleetSolution(m, tuple(tuple(r) for r in p2),
                         tuple(tuple(r) for r in pred2))


def bellman_split_soft(inst: Instance,
                       excess_bound: float | None = None) -> SplitSolution:
    """Split with linear overload penalties, by full predecessor scan.

    Every arc exists, so each node extends to all later nodes: O(n^2).
    excess_bound, when given, restricts routes to a total load of
    excess_bound * capacity, trading exactness on extreme overloads for a
    bounded scan (O(nB') with B' implied by the bound).
    """
    validate(inst, "soft").raise_if_invalid()
    n = inst.n
    if n == 0:
        return SplitSolution((0.0,), (0,), (), 0.0, "feasible")
    q = inst.demand
    d_prev = inst.dist_prev
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity
    alpha = inst.alpha
    load_bound = INF if excess_bound is None else excess_bound * cap

    p = [INF] * (n + 1)
    pred = [0] * (n + 1)
    p[0] = 0.0
    for t in range(n):
        pt = p[t]
        load = 0.0
        dist = 0.0
        for i in range(t + 1, n + 1):
            load += q[i]
            if load > load_bound:
                break
            if i == t + 1:
                dist = d_from[i]
            else:
                dist += d_prev[i]
            over = load - cap
            c = pt + dist + d_to[i] + (alpha * over if over > 0 else 0.0)
            if c < p[i]:
                p[i] = c
                pred[i] = t
    return solution_from_labels(inst, p, pred)


def oracle_shortest_path(inst: Instance, mode: str = "hard",
                         fleet: int | None = None,
                         size_guard: int = 2000):
    """Brute-force optimum over the complete predecessor graph.

    Scans all O(n^2) arcs with no early exit and its own locally computed
    prefix sums, independent of the other solvers' shortcuts.  Intended as
    the ground truth for acceptance tests; refuses instances larger than
    size_guard.  Returns a SplitSolution, or a FleetSolution when fleet is
    given (hard mode only).
    """
    if mode not in ("hard", "soft"):
        raise ValueError(f"mode must be 'hard' or 'soft', got {mode!r}")
    if inst.n > size_guard:
        raise ValueError(f"n={inst.n} exceeds oracle size guard {size_guard}")
    if fleet is not None and mode == "soft":
        raise ValueError("fleet-limited oracle supports hard mode only")
    n = inst.n
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity
    alpha = inst.alpha
    soft = mode == "soft"

    cum_dist = [0.0] * (n + 1)
    cum_load = [0.0] * (n + 1)
    for i in range(2, n + 1):
        cum_dist[i] = cum_dist[i - 1] + inst.dist_prev[i]
    for i in range(1, n + 1):
        cum_load[i] = cum_load[i - 1] + inst.demand[i]

    def arc(i, j):
        c = d_from[i + 1] + cum_dist[j] - cum_dist[i + 1] + d_to[j]
        if soft:
            over = cum_load[j] - cum_load[i] - cap
            if over > 0:
                c += alpha * over
        return c

    if fleet is None:
        p = [INF] * (n + 1)
        pred = [0] * (n + 1)
        p[0] = 0.0
        for t in range(1, n + 1):
            best = INF
            arg = 0
            for i in range(t):
                if p[i] == INF:
                    continue
                if not soft and cum_load[t] - cum_load[i] > cap:
                    continue
                c = p[i] + arc(i, t)
                if c < best:
                    best = c
                    arg = i
            p[t] = best
            pred[t] = arg
        return solution_from_labels(inst, p, pred)

    m = fleet
    if m < 1:
        raise ValueError(f"vehicle count must be >= 1, got {m}")
    p2 = [[INF] * (n + 1) for _ in range(m + 1)]
    pred2 = [[0] * (n + 1) for _ in range(m + 1)]
    p2[0][0] = 0.0
    for k in range(1, m + 1):
        for t in range(1, n + 1):
            best = INF
            arg = 0
            for i in range(t):
                if p2[k - 1][i] == INF:
                    continue
                if cum_load[t] - cum_load[i] > cap:
                    continue
                c = p2[k - 1][i] + arc(i, t)
                if c < best:
                    best = c
                    arg = i
            p2[k][t] = best
            pred2[k][t] = arg
    return FleetSolution(m, tuple(tuple(r) for r in p2),
                         tuple(tuple(r) for r in pred2))
