"""Fleet-limited linear Split: one dominance-filtered pass per vehicle level.

Level k extends labels of k-route covers into (k+1)-route covers using the
same predecessor queue as the single-level solver, except that candidate
profiles read the level-k label row.  Each level is O(n), so the whole
table costs O(nm).
"""

from __future__ import annotations

from .model import (
    INF,
    FleetSolution,
    Instance,
    Preprocessed,
    preprocess,
    validate,
)
from .linear import PredecessorDeque, _check_queue_invariant, _check_work_bound


def linear_split_fleet(inst: Instance, m: int,
                       pre: Preprocessed | None = None,
                       check_invariants: bool = False) -> FleetSolution:
    """Cheapest cover of 1..t by exactly k routes, for all k <= m.

    Same table as bellman_split_fleet, computed in O(nm).  A level's scan
    stops as soon as its candidate queue empties (no further position is
    reachable with that many routes).  Candidates whose level label is
    infinite are never enqueued.
    """
    if m < 1:
        raise ValueError(f"vehicle count must be >= 1, got {m}")
    validate(inst, "hard").raise_if_invalid()
    n = inst.n
    if pre is None:
        pre = preprocess(inst)
    cum_dist = pre.cum_dist
    cum_load = pre.cum_load
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity

    p2 = [[INF] * (n + 1) for _ in range(m + 1)]
    pred2 = [[0] * (n + 1) for _ in range(m + 1)]
    p2[0][0] = 0.0
    all_stats = []

    for k in range(min(m, n)):
        pk = p2[k]
        pk1 = p2[k + 1]
        predk1 = pred2[k + 1]
        if pk[k] == INF:
            break  # cannot seed this level; all later levels stay infinite too
        queue = PredecessorDeque(n + 1, k)
        g = [0.0] * (n + 1)
        g[k] = pk[k] + d_from[k + 1] - cum_dist[k + 1]
        for t in range(k + 1, n + 1):
            if len(queue) == 0:
                break  # last position reachable with k+1 routes was passed
            if check_invariants:
                _check_queue_invariant(queue, g, cum_load, cap, t)
            f = queue.front
            pk1[t] = pk[f] + d_from[f + 1] + cum_dist[t] - cum_dist[f + 1] + d_to[t]
            predk1[t] = f
            if t < n:
                if pk[t] < INF:
                    g[t] = pk[t] + d_from[t + 1] - cum_dist[t + 1]
                    back = queue.back
                    if not (g[back] <= g[t] and cum_load[back] == cum_load[t]):
                        while len(queue) > 0 and g[t] <= g[queue.back]:
                            queue.pop_back()
                        queue.push_back(t)
                while (len(queue) > 0
                       and cum_load[t + 1] > cap + cum_load[queue.front]):
                    queue.pop_front()
        stats = queue.stats()
        if check_invariants:
            _check_work_bound(stats, n)
        all_stats.append(stats)

    return FleetSolution(m, tuple(tuple(r) for r in p2),
                         tuple(tuple(r) for r in pred2), tuple(all_stats))


def best_with_at_most(fs: FleetSolution, m: int):
    """Best (k, cost) over fleets of at most m vehicles.

    Returns (None, inf) when no k <= m covers the whole tour.  An empty
    instance is covered by zero routes at cost 0.  Ties go to the smallest
    fleet.
    """
    if m > fs.levels:
        raise ValueError(f"m={m} exceeds computed levels {fs.levels}")
    n = len(fs.labels[0]) - 1
    if n == 0:
        return 0, 0.0
    best_k = None
    best = INF
    for k in range(1, m + 1):
        c = fs.labels[k][n]
        if c < best:
            best = c
            best_k = k
    return best_k, best
