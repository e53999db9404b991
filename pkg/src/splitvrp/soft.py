"""Linear-time Split with soft capacity: overloads cost alpha per unit.

Every arc exists, so feasibility can no longer evict stale candidates from
the queue front.  Instead each candidate's extension cost is a two-piece
function of the target's cumulative load (flat until the capacity is
consumed, then rising with slope alpha), dominance compares those
functions pointwise, and the front is retired as soon as the second
element becomes at least as good for the next position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    INF,
    DequeStats,
    Instance,
    InvariantError,
    Preprocessed,
    SplitSolution,
    preprocess,
    solution_from_labels,
    validate,
)
from .linear import PredecessorDeque, _check_work_bound


@dataclass(frozen=True)
class SoftProfile:
    """Extension-cost function of one candidate predecessor.

    Extending to a target with cumulative load q costs fixed_cost while
    q <= cum_load + capacity, then grows with slope alpha; see h_eval.
    """

    fixed_cost: float
    cum_load: float


def soft_profile(pre: Preprocessed, inst: Instance, p_i: float,
                 i: int) -> SoftProfile:
    """Profile of predecessor i given its label value p_i."""
    h = p_i + inst.dist_from_depot[i + 1] - pre.cum_dist[i + 1]
    return SoftProfile(h, pre.cum_load[i])


def h_eval(sp: SoftProfile, q: float, capacity: float, alpha: float) -> float:
    """Extension cost of this candidate toward a target whose cumulative
    load is q (target-position terms excluded, they are common to all
    candidates)."""
    over = q - sp.cum_load - capacity
    return sp.fixed_cost + alpha * over if over > 0 else sp.fixed_cost


def dominates_soft(a: SoftProfile, b: SoftProfile, a_index_lt_b: bool,
                   alpha: float) -> bool:
    """True when candidate a's extension cost is <= b's for every target.

    An earlier candidate (a_index_lt_b) starts paying the overload slope
    sooner, so it must absorb the load gap at slope alpha; a later one
    dominates on fixed cost alone.
    """
    if a_index_lt_b:
        return a.fixed_cost + alpha * (b.cum_load - a.cum_load) <= b.fixed_cost
    return a.fixed_cost <= b.fixed_cost


def _check_soft_invariant(queue: PredecessorDeque, h, cum_load,
                          cap: float, alpha: float, t: int):
    """Queue must be ranked by strictly increasing fixed cost with
    nondecreasing load, consecutive members mutually nondominated, and the
    front strictly better than the second element for the current target."""
    items = queue.elements()
    for a, b in zip(items, items[1:]):
        if not (h[a] < h[b]):
            raise InvariantError(
                f"t={t}: queue not ranked by cost: h[{a}]={h[a]} >= h[{b}]={h[b]}")
        if not (cum_load[a] <= cum_load[b]):
            raise InvariantError(
                f"t={t}: queue loads not nondecreasing at ({a},{b})")
        if not (h[a] + alpha * (cum_load[b] - cum_load[a]) > h[b]):
            raise InvariantError(
                f"t={t}: member {a} dominates its successor {b}")
    if len(items) >= 2:
        qt = cum_load[t]
        a, b = items[0], items[1]
        over_a = qt - cum_load[a] - cap
        over_b = qt - cum_load[b] - cap
        va = h[a] + (alpha * over_a if over_a > 0 else 0.0)
        vb = h[b] + (alpha * over_b if over_b > 0 else 0.0)
        if not (va < vb):
            raise InvariantError(
                f"t={t}: front {a} is not strictly better than {b}")


def linear_split_soft(inst: Instance, pre: Preprocessed | None = None,
                      check_invariants: bool = False,
                      iteration_hook=None) -> SplitSolution:
    """Optimal soft-capacity split in one O(n) pass.

    Produces the same costs as the unbounded bellman_split_soft.  Always
    feasible: every position is reachable, the queue never empties
    (front removal requires at least two elements).
    """
    validate(inst, "soft").raise_if_invalid()
    n = inst.n
    if pre is None:
        pre = preprocess(inst)
    if n == 0:
        return SplitSolution((0.0,), (0,), (), 0.0, "feasible", DequeStats())

    cum_dist = pre.cum_dist
    cum_load = pre.cum_load
    d_from = inst.dist_from_depot
    d_to = inst.dist_to_depot
    cap = inst.capacity
    alpha = inst.alpha

    p = [INF] * (n + 1)
    pred = [0] * (n + 1)
    h = [0.0] * (n + 1)
    p[0] = 0.0
    h[0] = d_from[1]
    queue = PredecessorDeque(n + 1, 0)

    for t in range(1, n + 1):
        if iteration_hook is not None:
            iteration_hook(t, queue.elements())
        if check_invariants:
            _check_soft_invariant(queue, h, cum_load, cap, alpha, t)
        f = queue.front
        over = cum_load[t] - cum_load[f] - cap
        p[t] = (h[f] + (alpha * over if over > 0 else 0.0)
                + cum_dist[t] + d_to[t])
        pred[t] = f
        if t < n:
            h[t] = p[t] + d_from[t + 1] - cum_dist[t + 1]
            back = queue.back
            back_dominates_t = (
                h[back] + alpha * (cum_load[t] - cum_load[back]) <= h[t])
            if not back_dominates_t:
                while len(queue) > 0 and h[t] <= h[queue.back]:
                    queue.pop_back()
                queue.push_back(t)
            q_next = cum_load[t + 1]
            while len(queue) > 1:
                f1 = queue.front
                f2 = queue.front2
                o1 = q_next - cum_load[f1] - cap
                o2 = q_next - cum_load[f2] - cap
                v1 = h[f1] + (alpha * o1 if o1 > 0 else 0.0)
                v2 = h[f2] + (alpha * o2 if o2 > 0 else 0.0)
                if v1 >= v2:
                    queue.pop_front()
                else:
                    break

    stats = queue.stats()
    if check_invariants:
        _check_work_bound(stats, n)
    return solution_from_labels(inst, p, pred, stats)
