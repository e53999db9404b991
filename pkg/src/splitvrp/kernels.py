"""Compiled solver kernels used by the benchmark harness.

Timing the algorithms on interpreter loops would measure CPython overhead,
not the algorithms, so the benchmark runs these numba-compiled kernels
instead.  Each kernel is a line-for-line port of the corresponding pure
Python solver (same relaxation rules, same tie handling) and the test
suite asserts identical label tables on shared instances.  Both sides of
every baseline/linear comparison use the same simple arrays and arithmetic,
so measured ratios reflect the algorithmic difference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .model import Instance


@dataclass(frozen=True)
class InstanceArrays:
    """Instance data as padded float64 arrays (index 0 unused)."""

    n: int
    demand: np.ndarray
    dist_prev: np.ndarray
    dist_from_depot: np.ndarray
    dist_to_depot: np.ndarray

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceArrays":
        return cls(
            inst.n,
            np.asarray(inst.demand, dtype=np.float64),
            np.asarray(inst.dist_prev, dtype=np.float64),
            np.asarray(inst.dist_from_depot, dtype=np.float64),
            np.asarray(inst.dist_to_depot, dtype=np.float64),
        )


@njit(cache=True)
def prefix_arrays(demand, dist_prev):
    n = demand.shape[0] - 1
    cum_dist = np.zeros(n + 1, np.float64)
    cum_load = np.zeros(n + 1, np.float64)
    for i in range(2, n + 1):
        cum_dist[i] = cum_dist[i - 1] + dist_prev[i]
    for i in range(1, n + 1):
        cum_load[i] = cum_load[i - 1] + demand[i]
    return cum_dist, cum_load


@njit(cache=True)
def bellman_hard(demand, dist_prev, d_from, d_to, cap):
    n = demand.shape[0] - 1
    p = np.full(n + 1, np.inf)
    pred = np.zeros(n + 1, np.int64)
    p[0] = 0.0
    for t in range(n):
        pt = p[t]
        load = 0.0
        dist = 0.0
        i = t + 1
        while i <= n and load <= cap:
            load += demand[i]
            if i == t + 1:
                dist = d_from[i]
            else:
                dist += dist_prev[i]
            if load <= cap:
                c = pt + dist + d_to[i]
                if c < p[i]:
                    p[i] = c
                    pred[i] = t
            i += 1
    return p, pred


@njit(cache=True)
def linear_hard(cum_dist, cum_load, d_from, d_to, cap):
    n = cum_dist.shape[0] - 1
    p = np.full(n + 1, np.inf)
    pred = np.zeros(n + 1, np.int64)
    g = np.zeros(n + 1, np.float64)
    lam = np.zeros(n + 1, np.int64)
    p[0] = 0.0
    g[0] = d_from[1]
    head = 0
    tail = 0  # inclusive
    for t in range(1, n + 1):
        f = lam[head]
        p[t] = p[f] + d_from[f + 1] + cum_dist[t] - cum_dist[f + 1] + d_to[t]
        pred[t] = f
        if t < n:
            g[t] = p[t] + d_from[t + 1] - cum_dist[t + 1]
            b = lam[tail]
            if not (g[b] <= g[t] and cum_load[b] == cum_load[t]):
                while tail >= head and g[t] <= g[lam[tail]]:
                    tail -= 1
                tail += 1
                lam[tail] = t
            while cum_load[t + 1] > cap + cum_load[lam[head]]:
                head += 1
    return p, pred


@njit(cache=True)
def bellman_fleet(demand, dist_prev, d_from, d_to, cap, m):
    n = demand.shape[0] - 1
    p2 = np.full((m + 1, n + 1), np.inf)
    pred2 = np.zeros((m + 1, n + 1), np.int64)
    p2[0, 0] = 0.0
    for k in range(m):
        for t in range(k, n):
            pt = p2[k, t]
            if pt == np.inf:
                continue
            load = 0.0
            dist = 0.0
            i = t + 1
            while i <= n and load <= cap:
                load += demand[i]
                if i == t + 1:
                    dist = d_from[i]
                else:
                    dist += dist_prev[i]
                if load <= cap:
                    c = pt + dist + d_to[i]
                    if c < p2[k + 1, i]:
                        p2[k + 1, i] = c
                        pred2[k + 1, i] = t
                i += 1
    return p2, pred2


@njit(cache=True)
def linear_fleet(cum_dist, cum_load, d_from, d_to, cap, m):
    n = cum_dist.shape[0] - 1
    p2 = np.full((m + 1, n + 1), np.inf)
    pred2 = np.zeros((m + 1, n + 1), np.int64)
    g = np.zeros(n + 1, np.float64)
    lam = np.zeros(n + 1, np.int64)
    p2[0, 0] = 0.0
    levels = m if m < n else n
    for k in range(levels):
        if p2[k, k] == np.inf:
            break
        head = 0
        tail = 0
        lam[0] = k
        g[k] = p2[k, k] + d_from[k + 1] - cum_dist[k + 1]
        for t in range(k + 1, n + 1):
            if tail < head:
                break
            f = lam[head]
            p2[k + 1, t] = (p2[k, f] + d_from[f + 1] + cum_dist[t]
                            - cum_dist[f + 1] + d_to[t])
            pred2[k + 1, t] = f
            if t < n:
                if p2[k, t] < np.inf:
                    g[t] = p2[k, t] + d_from[t + 1] - cum_dist[t + 1]
                    b = lam[tail]
                    if not (g[b] <= g[t] and cum_load[b] == cum_load[t]):
                        while tail >= head and g[t] <= g[lam[tail]]:
                            tail -= 1
                        tail += 1
                        lam[tail] = t
                while (tail >= head
                       and cum_load[t + 1] > cap + cum_load[lam[head]]):
                    head += 1
    return p2, pred2


@njit(cache=True)
def bellman_soft(demand, dist_prev, d_from, d_to, cap, alpha, load_bound):
    n = demand.shape[0] - 1
    p = np.full(n + 1, np.inf)
    pred = np.zeros(n + 1, np.int64)
    p[0] = 0.0
    for t in range(n):
        pt = p[t]
        load = 0.0
        dist = 0.0
        for i in range(t + 1, n + 1):
            load += demand[i]
            if load > load_bound:
                break
            if i == t + 1:
                dist = d_from[i]
            else:
                dist += dist_prev[i]
            over = load - cap
            c = pt + dist + d_to[i]
            if over > 0.0:
                c += alpha * over
            if c < p[i]:
                p[i] = c
                pred[i] = t
    return p, pred


@njit(cache=True)
def linear_soft(cum_dist, cum_load, d_from, d_to, cap, alpha):
    n = cum_dist.shape[0] - 1
    p = np.full(n + 1, np.inf)
    pred = np.zeros(n + 1, np.int64)
    h = np.zeros(n + 1, np.float64)
    lam = np.zeros(n + 1, np.int64)
    p[0] = 0.0
    h[0] = d_from[1]
    head = 0
    tail = 0
    for t in range(1, n + 1):
        f = lam[head]
        over = cum_load[t] - cum_load[f] - cap
        c = h[f] + cum_dist[t] + d_to[t]
        if over > 0.0:
            c += alpha * over
        p[t] = c
        pred[t] = f
        if t < n:
            h[t] = p[t] + d_from[t + 1] - cum_dist[t + 1]
            b = lam[tail]
            if not (h[b] + alpha * (cum_load[t] - cum_load[b]) <= h[t]):
                while tail >= head and h[t] <= h[lam[tail]]:
                    tail -= 1
                tail += 1
                lam[tail] = t
            q_next = cum_load[t + 1]
            while tail > head:
                f1 = lam[head]
                f2 = lam[head + 1]
                o1 = q_next - cum_load[f1] - cap
                v1 = h[f1] + (alpha * o1 if o1 > 0.0 else 0.0)
                o2 = q_next - cum_load[f2] - cap
                v2 = h[f2] + (alpha * o2 if o2 > 0.0 else 0.0)
                if v1 >= v2:
                    head += 1
                else:
                    break
    return p, pred


def warm_up():
    """Force-compile every kernel on a tiny input (one-time cost)."""
    arrays = InstanceArrays(
        2,
        np.array([0.0, 1.0, 1.0]),
        np.array([0.0, 1.0, 1.0]),
        np.array([0.0, 1.0, 1.0]),
        np.array([0.0, 1.0, 1.0]),
    )
    cd, cl = prefix_arrays(arrays.demand, arrays.dist_prev)
    bellman_hard(arrays.demand, arrays.dist_prev, arrays.dist_from_depot,
                 arrays.dist_to_depot, 2.0)
    linear_hard(cd, cl, arrays.dist_from_depot, arrays.dist_to_depot, 2.0)
    bellman_fleet(arrays.demand, arrays.dist_prev, arrays.dist_from_depot,
                  arrays.dist_to_depot, 2.0, 2)
    linear_fleet(cd, cl, arrays.dist_from_depot, arrays.dist_to_depot, 2.0, 2)
    bellman_soft(arrays.demand, arrays.dist_prev, arrays.dist_from_depot,
                 arrays.dist_to_depot, 2.0, 1.0, np.inf)
    linear_soft(cd, cl, arrays.dist_from_depot, arrays.dist_to_depot, 2.0, 1.0)
