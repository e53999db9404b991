import numpy as np
import pytest

import splitvrp as sv
from splitvrp import kernels


@pytest.fixture(scope="module", autouse=True)
def warm():
    kernels.warm_up()


def _arrays(inst):
    a = kernels.InstanceArrays.from_instance(inst)
    cd, cl = kernels.prefix_arrays(a.demand, a.dist_prev)
    return a, cd, cl


def test_instance_arrays_shapes(figure_instance):
    a = kernels.InstanceArrays.from_instance(figure_instance)
    assert a.n == 12
    assert a.demand.shape == (13,)
    assert a.demand.dtype == np.float64


def test_prefix_arrays_match_preprocess(figure_instance, figure_pre):
    _, cd, cl = _arrays(figure_instance)
    assert tuple(cd) == figure_pre.cum_dist
    assert tuple(cl) == figure_pre.cum_load


def test_hard_kernels_match_python_solvers():
    rng = sv.SplitMix64(31337)
    caps = (60.0, 150.0, 400.0, 1000.0)
    for case in range(120):
        inst = sv.gen_random(rng.randint(0, 50), rng.next_u64(),
                             capacity=caps[case % 4])
        a, cd, cl = _arrays(inst)
        want = sv.bellman_split(inst).labels
        p, pred = kernels.bellman_hard(a.demand, a.dist_prev,
                                       a.dist_from_depot, a.dist_to_depot,
                                       inst.capacity)
        assert tuple(p) == want
        p, pred = kernels.linear_hard(cd, cl, a.dist_from_depot,
                                      a.dist_to_depot, inst.capacity)
        assert tuple(p) == want
        if inst.n and want[-1] < sv.INF:
            routes = sv.extract_routes(pred, inst.n)
            assert sv.recompute_cost(inst, routes) == want[-1]


def test_fleet_kernels_match_python_solvers():
    rng = sv.SplitMix64(555)
    for case in range(60):
        inst = sv.gen_random(rng.randint(0, 35), rng.next_u64(),
                             capacity=(60.0, 200.0)[case % 2])
        m = 1 + case % 7
        a, cd, cl = _arrays(inst)
        want = sv.bellman_split_fleet(inst, m).labels
        p2, _ = kernels.bellman_fleet(a.demand, a.dist_prev,
                                      a.dist_from_depot, a.dist_to_depot,
                                      inst.capacity, m)
        assert tuple(map(tuple, p2)) == want
        p2, _ = kernels.linear_fleet(cd, cl, a.dist_from_depot,
                                     a.dist_to_depot, inst.capacity, m)
        assert tuple(map(tuple, p2)) == want


def test_soft_kernels_match_python_solvers():
    rng = sv.SplitMix64(777)
    alphas = (0.0, 0.5, 1.0, 2.0, 1000.0)
    for case in range(100):
        inst = sv.gen_random(rng.randint(0, 50), rng.next_u64(),
                             capacity=80.0, alpha=alphas[case % 5],
                             mode="soft")
        a, cd, cl = _arrays(inst)
        want = sv.bellman_split_soft(inst).labels
        p, _ = kernels.bellman_soft(a.demand, a.dist_prev, a.dist_from_depot,
                                    a.dist_to_depot, inst.capacity,
                                    inst.alpha, np.inf)
        assert tuple(p) == want
        p, _ = kernels.linear_soft(cd, cl, a.dist_from_depot, a.dist_to_depot,
                                   inst.capacity, inst.alpha)
        assert tuple(p) == want


def test_bounded_soft_kernel_matches_python():
    rng = sv.SplitMix64(888)
    for case in range(40):
        inst = sv.gen_random(rng.randint(1, 40), rng.next_u64(),
                             capacity=60.0, alpha=1.0, mode="soft")
        a, _, _ = _arrays(inst)
        want = sv.bellman_split_soft(inst, excess_bound=4.0).labels
        p, _ = kernels.bellman_soft(a.demand, a.dist_prev, a.dist_from_depot,
                                    a.dist_to_depot, inst.capacity,
                                    inst.alpha, 4.0 * inst.capacity)
        assert tuple(p) == want


def test_warm_up_idempotent():
    kernels.warm_up()
    kernels.warm_up()
