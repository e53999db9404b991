import pytest

import splitvrp as sv


def test_fleet_golden(figure_instance):
    fs = sv.linear_split_fleet(figure_instance, 3, check_invariants=True)
    assert fs.labels[3][12] == 84.0
    assert fs.labels == sv.bellman_split_fleet(figure_instance, 3).labels
    assert fs.per_k_cost == (sv.INF, sv.INF, 84.0)

    fs2 = sv.linear_split_fleet(figure_instance, 2)
    assert fs2.labels[2][12] == sv.INF


def test_best_with_at_most_golden(figure_instance):
    fs = sv.linear_split_fleet(figure_instance, 3)
    assert sv.best_with_at_most(fs, 3) == (3, 84.0)
    assert sv.best_with_at_most(fs, 2) == (None, sv.INF)
    with pytest.raises(ValueError):
        sv.best_with_at_most(fs, 4)


def test_matches_bellman_tables_on_random_instances():
    rng = sv.SplitMix64(606)
    caps = (60.0, 100.0, 200.0, 500.0)
    feasible = infeasible = 0
    for case in range(120):
        inst = sv.gen_random(rng.randint(1, 40), rng.next_u64(),
                             capacity=caps[case % len(caps)])
        m = 1 + case % 8
        lf = sv.linear_split_fleet(inst, m, check_invariants=True)
        bf = sv.bellman_split_fleet(inst, m)
        assert lf.labels == bf.labels
        if sv.best_with_at_most(lf, m)[0] is None:
            infeasible += 1
        else:
            feasible += 1
    assert feasible > 0 and infeasible > 0


def test_consistent_with_unlimited_split():
    rng = sv.SplitMix64(707)
    for case in range(60):
        inst = sv.gen_random(rng.randint(1, 40), rng.next_u64(),
                             capacity=120.0)
        unlimited = sv.linear_split(inst)
        m = unlimited.num_routes
        fs = sv.linear_split_fleet(inst, m)
        _, cost = sv.best_with_at_most(fs, m)
        assert cost == unlimited.cost


def test_best_cost_nonincreasing_in_m():
    inst = sv.gen_random(30, seed=31, capacity=80.0)
    fs = sv.linear_split_fleet(inst, 10)
    costs = [sv.best_with_at_most(fs, m)[1] for m in range(1, 11)]
    assert all(a >= b for a, b in zip(costs, costs[1:]))


def test_result_never_worse_than_singletons():
    rng = sv.SplitMix64(808)
    for case in range(40):
        n = rng.randint(1, 25)
        inst = sv.gen_random(n, rng.next_u64(), capacity=100.0)
        singletons = sum(inst.dist_from_depot[i] + inst.dist_to_depot[i]
                         for i in range(1, n + 1))
        _, cost = sv.best_with_at_most(sv.linear_split_fleet(inst, n), n)
        assert cost <= singletons


def test_traceback_yields_k_covering_routes():
    inst = sv.gen_random(24, seed=97, capacity=70.0)
    m = 9
    fs = sv.linear_split_fleet(inst, m)
    checked = 0
    for k in range(1, m + 1):
        for t in range(1, inst.n + 1):
            if fs.labels[k][t] == sv.INF or (t - k) % 5:
                continue
            routes = sv.extract_fleet_routes(fs, k, t)
            assert len(routes) == k
            assert routes[0][0] == 1 and routes[-1][1] == t
            assert all(r1[1] + 1 == r2[0] for r1, r2 in zip(routes, routes[1:]))
            checked += 1
    assert checked > 0


def test_per_level_work_bounds():
    inst = sv.gen_random(50, seed=64, capacity=300.0)
    fs = sv.linear_split_fleet(inst, 6, check_invariants=True)
    assert fs.deque_stats is not None
    for stats in fs.deque_stats:
        assert stats.pushes <= inst.n
        assert stats.pops <= stats.pushes


def test_empty_instance_and_argument_checks():
    empty = sv.make_instance([], [], [], [], capacity=5)
    fs = sv.linear_split_fleet(empty, 2)
    assert fs.labels[0][0] == 0.0
    assert sv.best_with_at_most(fs, 2) == (0, 0.0)
    with pytest.raises(ValueError):
        sv.linear_split_fleet(empty, 0)
    inst = sv.make_instance([5, 20], [0, 3], [1, 1], [1, 1], capacity=10)
    with pytest.raises(sv.InvalidInstanceError):
        sv.linear_split_fleet(inst, 2)
