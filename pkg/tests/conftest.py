import pytest

import splitvrp as sv

# 12-customer golden fixture: symmetric depot returns, capacity 30.
FIGURE_DEMAND = [11, 3, 6, 5, 7, 8, 1, 7, 3, 7, 3, 6]
FIGURE_D_PREV = [4, 3, 7, 2, 7, 3, 8, 6, 8, 4, 3, 3]
FIGURE_D_DEPOT = [4, 5, 10, 9, 14, 12, 16, 11, 5, 3, 5, 6]
FIGURE_CAPACITY = 30.0

FIGURE_LABELS = (0.0, 8.0, 12.0, 24.0, 25.0, 43.0, 44.0, 56.0,
                 67.0, 69.0, 75.0, 80.0, 84.0)
FIGURE_ROUTES = ((1, 4), (5, 9), (10, 12))
FIGURE_COST = 84.0

FIGURE_CUM_DIST = (0.0, 3.0, 10.0, 12.0, 19.0, 22.0, 30.0, 36.0,
                   44.0, 48.0, 51.0, 54.0)
FIGURE_CUM_LOAD = (0.0, 11.0, 14.0, 20.0, 25.0, 32.0, 40.0, 41.0,
                   48.0, 51.0, 58.0, 61.0, 67.0)


def build_figure_instance(capacity=FIGURE_CAPACITY, alpha=1.0) -> sv.Instance:
    return sv.make_instance(FIGURE_DEMAND, FIGURE_D_PREV, FIGURE_D_DEPOT,
                            FIGURE_D_DEPOT, capacity=capacity, alpha=alpha)


@pytest.fixture(scope="session")
def figure_instance() -> sv.Instance:
    return build_figure_instance()


@pytest.fixture(scope="session")
def figure_pre(figure_instance) -> sv.Preprocessed:
    return sv.preprocess(figure_instance)


@pytest.fixture()
def figure_file(figure_instance, tmp_path):
    path = tmp_path / "figure12.split"
    sv.write_instance(figure_instance, path)
    return path
