"""Split algorithms for vehicle routing: optimal segmentation of a giant
tour into capacity-feasible routes.

Solvers: the classical label-propagation baseline (bellman_split), the
linear-time dominance-queue solver (linear_split), fleet-limited variants
(bellman_split_fleet / linear_split_fleet) and soft-capacity variants
(bellman_split_soft / linear_split_soft), plus a brute-force oracle for
testing.  See the CLI (`splitvrp --help`) for solving, verification,
benchmarking and instance generation from the command line.
"""

from .bellman import (
    bellman_split,
    bellman_split_fleet,
    bellman_split_soft,
    oracle_shortest_path,
)
from .fleet import best_with_at_most, linear_split_fleet
from .generate import (
    CAPACITY_GRID,
    PointSet,
    SplitMix64,
    Tour,
    build_instance,
    capacity_sweep,
    choose_depot,
    gen_random,
    load_points,
    load_tour,
)
from .instance_io import read_instance, write_instance
from .linear import (
    PredecessorDeque,
    PredecessorProfile,
    dominates_hard,
    linear_split,
    profile,
)
from .model import (
    INF,
    DequeStats,
    FleetSolution,
    Instance,
    InvalidInstanceError,
    InvariantError,
    ParseError,
    Preprocessed,
    RouteChainError,
    SplitError,
    SplitSolution,
    ValidationReport,
    arc_cost,
    arc_feasible,
    extract_fleet_routes,
    extract_routes,
    make_instance,
    preprocess,
    recompute_cost,
    soft_arc_cost,
    validate,
)
from .soft import SoftProfile, dominates_soft, h_eval, linear_split_soft, soft_profile
from .verify import SolverSet, VerifyResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CAPACITY_GRID",
    "DequeStats",
    "FleetSolution",
    "Instance",
    "InvalidInstanceError",
    "InvariantError",
    "ParseError",
    "PointSet",
    "PredecessorDeque",
    "PredecessorProfile",
    "Preprocessed",
    "RouteChainError",
    "SoftProfile",
    "SolverSet",
    "SplitError",
    "SplitMix64",
    "SplitSolution",
    "Tour",
    "ValidationReport",
    "VerifyResult",
    "arc_cost",
    "arc_feasible",
    "bellman_split",
    "bellman_split_fleet",
    "bellman_split_soft",
    "best_with_at_most",
    "build_instance",
    "capacity_sweep",
    "choose_depot",
    "dominates_hard",
    "dominates_soft",
    "extract_fleet_routes",
    "extract_routes",
    "gen_random",
    "h_eval",
    "linear_split",
    "linear_split_fleet",
    "linear_split_soft",
    "load_points",
    "load_tour",
    "make_instance",
    "oracle_shortest_path",
    "preprocess",
    "profile",
    "read_instance",
    "recompute_cost",
    "run_verification",
    "soft_arc_cost",
    "soft_profile",
    "validate",
    "write_instance",
    "__version__",
]
