"""Linear-time Split: dominance-filtered predecessor queue.

Scans the tour left to right once.  Candidate predecessors live in a
double-ended queue ordered by increasing fixed cost; the front is always a
cheapest feasible predecessor for the current position, so each label is
set in O(1).  Dominated candidates are evicted from the back on insertion,
candidates that can no longer be feasibly extended are evicted from the
front, and each position enters the queue at most once, giving O(n) total
work.
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


class PredecessorDeque:
    """Double-ended queue of candidate predecessor indices.

    Backed by a fixed buffer of size capacity with front/back cursors;
    no wrap-around is needed because each index is pushed at most once.
    All operations are O(1).  Counters record total pushes and pops so
    callers can assert the linear work bound.
    """

    __slots__ = ("slots", "front_cursor", "back_cursor",
                 "pushes", "front_pops", "back_pops")

    def __init__(self, capacity: int, first: int):
        self.slots = [0] * max(capacity, 1)
        self.slots[0] = first
        self.front_cursor = 0
        self.back_cursor = 0  # inclusive; queue empty when back < front
        self.pushes = 1
        self.front_pops = 0
        self.back_pops = 0

    def __len__(self) -> int:
        return self.back_cursor - self.front_cursor + 1

    def _require(self, size: int):
        if self.back_cursor - self.front_cursor + 1 < size:
            raise InvariantError(f"queue access needs {size} element(s), "
                                 f"have {self.back_cursor - self.front_cursor + 1}")

    @property
    def front(self) -> int:
        self._require(1)
        return self.slots[self.front_cursor]

    @property
    def front2(self) -> int:
        self._require(2)
        return self.slots[self.front_cursor + 1]

    @property
    def back(self) -> int:
        self._require(1)
        return self.slots[self.back_cursor]

    def push_back(self, i: int):
        self.back_cursor += 1
        self.slots[self.back_cursor] = i
        self.pushes += 1

    def pop_front(self):
        self._require(1)
        self.front_cursor += 1
        self.front_pops += 1

    def pop_back(self):
        self._require(1)
        self.back_cursor -= 1
        self.back_pops += 1

    def elements(self) -> tuple:
        """Snapshot of the live elements, front first."""
        return tuple(self.slots[self.front_cursor:self.back_cursor + 1])

    def stats(self) -> DequeStats:
        return DequeStats(self.pushes, self.front_pops, self.back_pops)


@dataclass(frozen=True)
class PredecessorProfile:
    """What extending a predecessor costs, independent of the target node.

    fixed_cost is the node-independent part of the extension cost;
    cum_load is the cumulative demand up to the predecessor, which decides
    how far the extension stays feasible.
    """

    fixed_cost: float
    cum_load: float


def profile(pre: Preprocessed, inst: Instance, p_i: float,
            i: int) -> PredecessorProfile:
    """Profile of predecessor i given its label value p_i."""
    g = p_i + inst.dist_from_depot[i + 1] - pre.cum_dist[i + 1]
    return PredecessorProfile(g, pre.cum_load[i])


def dominates_hard(a: PredecessorProfile, b: PredecessorProfile,
                   a_index_le_b: bool) -> bool:
    """True when predecessor a is never worse than b for any later node.

    An earlier predecessor (a_index_le_b) stays feasible for fewer
    extensions, so it only dominates when both loads are equal; a later
    one dominates on fixed cost alone.
    """
    if a_index_le_b:
        return a.fixed_cost <= b.fixed_cost and a.cum_load == b.cum_load
    return a.fixed_cost <= b.fixed_cost


def _check_queue_invariant(queue: PredecessorDeque, g, cum_load,
                           capacity: float, t: int):
    """Queue members must be mutually nondominated, ranked by strictly
    increasing fixed cost with nondecreasing load, and the front must be a
    feasible predecessor of t."""
    items = queue.elements()
    for a, b in zip(items, items[1:]):
        if not (g[a] < g[b]):
            raise InvariantError(
                f"t={t}: queue not ranked by cost: g[{a}]={g[a]} >= g[{b}]={g[b]}")
        if not (cum_load[a] <= cum_load[b]):
            raise InvariantError(
                f"t={t}: queue loads not nondecreasing at ({a},{b})")
    if cum_load[t] > capacity + cum_load[items[0]]:
        raise InvariantError(
            f"t={t}: front {items[0]} is not a feasible predecessor")


def linear_split(inst: Instance, pre: Preprocessed | None = None,
                 check_invariants: bool = False,
                 iteration_hook=None) -> SplitSolution:
    """Optimal hard-capacity split of the giant tour in one O(n) pass.

    Produces the same labels and cost as bellman_split.  The instance is
    validated up front; invalid instances raise InvalidInstanceError.
    check_invariants verifies the queue-ordering invariant at every
    iteration (slow; for verification runs).  iteration_hook, if given, is
    called as hook(t, queue_elements) at the top of each iteration.
    """
    validate(inst, "hard").raise_if_invalid()
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

    p = [INF] * (n + 1)
    pred = [0] * (n + 1)
    g = [0.0] * (n + 1)  # fixed cost per candidate, filled as labels settle
    p[0] = 0.0
    g[0] = d_from[1]
    queue = PredecessorDeque(n + 1, 0)

    for t in range(1, n + 1):
        if len(queue) == 0:
            raise InvariantError(f"queue empty at t={t} on a validated instance")
        if iteration_hook is not None:
            iteration_hook(t, queue.elements())
        if check_invariants:
            _check_queue_invariant(queue, g, cum_load, cap, t)
        f = queue.front
        p[t] = p[f] + d_from[f + 1] + cum_dist[t] - cum_dist[f + 1] + d_to[t]
        pred[t] = f
        if t < n:
            g[t] = p[t] + d_from[t + 1] - cum_dist[t + 1]
            back = queue.back
            back_dominates_t = g[back] <= g[t] and cum_load[back] == cum_load[t]
            if not back_dominates_t:
                while len(queue) > 0 and g[t] <= g[queue.back]:
                    queue.pop_back()
                queue.push_back(t)
            while cum_load[t + 1] > cap + cum_load[queue.front]:
                queue.pop_front()

    stats = queue.stats()
    if check_invariants:
        _check_work_bound(stats, n)
    return solution_from_labels(inst, p, pred, stats)


def _check_work_bound(stats: DequeStats, n: int):
    if stats.pushes > n + 1:
        raise InvariantError(f"{stats.pushes} pushes exceeds bound n+1={n + 1}")
    if stats.pops > stats.pushes:
        raise InvariantError(
            f"{stats.pops} pops exceeds {stats.pushes} pushes")
