"""Benchmark-instance construction: coordinate files, tours, random data.

Instances are built from a TSPLIB-style coordinate file plus a giant tour
(the tour is an input here, never computed): the depot is the node closest
to the barycenter, demands are drawn uniformly from [1, 50], and distances
are Euclidean, rounded to the nearest integer by default.  A small
self-contained PRNG keeps every generated instance reproducible from its
seed alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Instance, ParseError, make_instance

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator (splitmix64 finalizer).

    The state advances by 0x9E3779B97F4A7C15 per draw and is mixed by two
    multiply-xorshift rounds (constants 0xBF58476D1CE4E5B9 and
    0x94D049BB133111EB, shifts 30/27/31).  Fixed here, rather than taken
    from a library, so the exact stream is reproducible from this
    description in any language or library version.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive; unbiased via rejection."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def split(self) -> "SplitMix64":
        """Derive an independent child stream."""
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class PointSet:
    """Nodes with 2-D coordinates; ids are unique."""

    points: tuple  # (id, x, y) rows in file order

    def __post_init__(self):
        ids = [p[0] for p in self.points]
        if len(ids) != len(set(ids)):
            raise ValueError("duplicate node ids in point set")
        object.__setattr__(self, "_coords",
                           {p[0]: (p[1], p[2]) for p in self.points})

    @property
    def ids(self) -> tuple:
        return tuple(p[0] for p in self.points)

    def coord(self, node_id: int):
        return self._coords[node_id]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Tour:
    """A permutation of point-set ids, one visit each."""

    order: tuple


def load_points(path) -> PointSet:
    """Parse a TSPLIB coordinate file (EUC_2D subset).

    Supported content: KEY : VALUE headers, NODE_COORD_SECTION with
    'id x y' rows, optional EOF terminator.  Anything else, including
    other edge-weight types, is rejected with the offending line number.
    """
    headers = {}
    points = []
    seen = set()
    in_coords = False
    with open(path) as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.strip()
            if not line:
                continue
            if line == "EOF":
                break
            if in_coords:
                parts = line.split()
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: expected 'id x y', "
                                     f"got {line!r}")
                try:
                    nid = int(parts[0])
                    x, y = float(parts[1]), float(parts[2])
                except ValueError:
                    raise ParseError(
                        f"line {lineno}: bad coordinate row {line!r}") from None
                if nid in seen:
                    raise ParseError(f"line {lineno}: duplicate node id {nid}")
                seen.add(nid)
                points.append((nid, x, y))
            elif line == "NODE_COORD_SECTION":
                if headers.get("EDGE_WEIGHT_TYPE") != "EUC_2D":
                    raise ParseError(
                        f"line {lineno}: EDGE_WEIGHT_TYPE "
                        f"{headers.get('EDGE_WEIGHT_TYPE')!r} unsupported, "
                        f"need EUC_2D")
                in_coords = True
            else:
                key, sep, value = line.partition(":")
                if not sep:
                    raise ParseError(f"line {lineno}: expected 'KEY : VALUE' "
                                     f"header, got {line!r}")
                key = key.strip()
                value = value.strip()
                headers[key] = value
                if key == "EDGE_WEIGHT_TYPE" and value != "EUC_2D":
                    raise ParseError(f"line {lineno}: unsupported "
                                     f"EDGE_WEIGHT_TYPE {value!r}")
    if not points:
        raise ParseError("no NODE_COORD_SECTION rows found")
    dim = headers.get("DIMENSION")
    if dim is not None:
        try:
            expected = int(dim)
        except ValueError:
            raise ParseError(f"DIMENSION is not an integer: {dim!r}") from None
        if expected != len(points):
            raise ParseError(f"DIMENSION says {expected} nodes, "
                             f"file has {len(points)}")
    return PointSet(tuple(points))


def load_tour(path) -> Tour:
    """Read a tour as whitespace-separated node ids, EOF or -1 terminated."""
    order = []
    done = False
    with open(path) as f:
        for lineno, raw in enumerate(f, 1):
            if done:
                break
            for token in raw.split():
                if token == "-1":
                    done = True
                    break
                try:
                    order.append(int(token))
                except ValueError:
                    raise ParseError(
                        f"line {lineno}: bad node id {token!r}") from None
    if not order:
        raise ParseError("tour file contains no node ids")
    return Tour(tuple(order))


def choose_depot(ps: PointSet) -> int:
    """Node closest to the barycenter of all nodes; ties to smallest id."""
    if len(ps) == 0:
        raise ValueError("empty point set")
    cx = sum(p[1] for p in ps.points) / len(ps)
    cy = sum(p[2] for p in ps.points) / len(ps)
    best = min(ps.points, key=lambda p: ((p[1] - cx) ** 2 + (p[2] - cy) ** 2,
                                         p[0]))
    return best[0]


def _euclidean(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def build_instance(ps: PointSet, tour: Tour, depot: int, capacity: float,
                   alpha: float = 0.0, seed: int = 0,
                   demand_lo: int = 1, demand_hi: int = 50,
                   rounding: str = "nearest-integer") -> Instance:
    """Assemble a Split instance from coordinates and a giant tour.

    The tour is rotated so the depot comes first and is then dropped from
    the customer sequence; depot out/return distances are symmetric by
    construction.  Demands come from a SplitMix64 stream seeded with seed,
    so the result is bitwise reproducible.
    """
    if capacity <= 0:
        raise ValueError(f"capacity must be positive, got {capacity}")
    if not 0 <= demand_lo <= demand_hi:
        raise ValueError(f"bad demand range [{demand_lo}, {demand_hi}]")
    if rounding not in ("nearest-integer", "none"):
        raise ValueError(f"rounding must be 'nearest-integer' or 'none', "
                         f"got {rounding!r}")
    if depot not in tour.order:
        raise ValueError(f"depot {depot} is not in the tour")
    if sorted(tour.order) != sorted(ps.ids):
        raise ValueError("tour is not a permutation of the point-set ids")

    k = tour.order.index(depot)
    customers = tour.order[k + 1:] + tour.order[:k]
    n = len(customers)

    if rounding == "nearest-integer":
        def dist(a, b):
            return float(int(_euclidean(a, b) + 0.5))
    else:
        def dist(a, b):
            return _euclidean(a, b)

    depot_xy = ps.coord(depot)
    rng = SplitMix64(seed)
    demand = [float(rng.randint(demand_lo, demand_hi)) for _ in range(n)]
    d_depot = [dist(depot_xy, ps.coord(c)) for c in customers]
    d_prev = [0.0] * n
    if n:
        d_prev[0] = d_depot[0]  # slot for position 1, kept but never read
        for i in range(1, n):
            d_prev[i] = dist(ps.coord(customers[i - 1]), ps.coord(customers[i]))
    return make_instance(demand, d_prev, d_depot, list(d_depot),
                         capacity, alpha)


def gen_random(n: int, seed: int, demand_lo: int = 1, demand_hi: int = 50,
               capacity: float = 100.0, alpha: float = 0.0,
               mode: str = "hard") -> Instance:
    """Seeded random instance for property tests.

    Distances are uniform integers in [1, 100]; demands are uniform in
    [demand_lo, demand_hi] and, in hard mode, clamped to the capacity so
    the instance always validates.  Draw order: demands, then predecessor
    distances, then depot-out, then depot-return.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if mode not in ("hard", "soft"):
        raise ValueError(f"mode must be 'hard' or 'soft', got {mode!r}")
    rng = SplitMix64(seed)
    demand = [float(rng.randint(demand_lo, demand_hi)) for _ in range(n)]
    if mode == "hard":
        demand = [min(d, float(capacity)) for d in demand]
    d_prev = [float(rng.randint(1, 100)) for _ in range(n)]
    d_from = [float(rng.randint(1, 100)) for _ in range(n)]
    d_to = [float(rng.randint(1, 100)) for _ in range(n)]
    return make_instance(demand, d_prev, d_from, d_to, capacity, alpha)


CAPACITY_GRID = (100.0, 200.0, 400.0, 1000.0, 2000.0, 4000.0,
                 10000.0, 20000.0, 40000.0, 100000.0)


def capacity_sweep(total_demand: float) -> tuple:
    """Benchmark capacity grid, dropping values where one vehicle could
    already serve the whole demand."""
    return tuple(q for q in CAPACITY_GRID if q < total_demand)
