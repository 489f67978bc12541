"""Quotient maps of symmetric toroidal maps on spherical orbifolds.

A rotation of the torus of order ``L`` fixing some points turns an
r-regular toroidal map into a *quotient map* on a sphere carrying branch
points.  A branch point of index ``m`` may sit

* inside a face (at most one branch point per face),
* on a vertex, which then has degree ``r/m`` (needs ``m | r``),
* at the free end of a dangling semi-edge (only ``m = 2``).

For counting, dangling semi-edges are modelled as leaves whose single dart
may not carry the root, and vertices on branch points become *special*
vertices coloured by their branch index.  :class:`ConstrainedCounter`
counts such rooted planar maps by contracting the root edge.
"""

from __future__ import annotations

import itertools
import math
import threading
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from mapcensus.bigmath import as_int


class Location(Enum):
    FACE = "face"
    VERTEX = "vertex"
    DANGLING = "dangling"


@dataclass(frozen=True)
class OrbifoldSignature:
    branch_indices: tuple[int, ...]
    period: int
    multiplicity: int
    genus: int = 0

    def __post_init__(self):
        if any(m <= 1 or self.period % m for m in self.branch_indices):
            raise ValueError(f"bad branch indices {self.branch_indices} for period {self.period}")

    @property
    def label(self) -> str:
        parts = []
        for m, c in sorted(Counter(self.branch_indices).items()):
            parts.append(f"{m}^{c}" if c > 1 else str(m))
        return "[" + ",".join(parts) + "]"


def toroidal_orbifolds() -> list[OrbifoldSignature]:
    """Spherical quotients of the torus under periodic rotations.

    Multiplicity counts the homeomorphism classes with that signature (the
    rotations by a and -a share a signature except for the half-turn).
    """
    return [
        OrbifoldSignature((2, 2, 2, 2), 2, 1),
        OrbifoldSignature((2, 4, 4), 4, 2),
        OrbifoldSignature((3, 3, 3), 3, 2),
        OrbifoldSignature((2, 3, 6), 6, 2),
    ]


@dataclass(frozen=True)
class BranchPlacement:
    """Where each branch point goes; equal indices are unordered."""

    points: tuple[tuple[int, Location], ...]

    @classmethod
    def of(cls, pairs) -> "BranchPlacement":
        order = {Location.FACE: 0, Location.VERTEX: 1, Location.DANGLING: 2}
        return cls(tuple(sorted(pairs, key=lambda p: (p[0], order[p[1]]))))

    def at(self, where: Location) -> list[int]:
        return [m for m, loc in self.points if loc is where]

    @property
    def dangling(self) -> int:
        return len(self.at(Location.DANGLING))


def _allowed(m: int, r: int) -> list[Location]:
    locs = [Location.FACE]
    if r % m == 0:
        locs.append(Location.VERTEX)
    if m == 2:
        locs.append(Location.DANGLING)
    return locs


def enumerate_placements(sig: OrbifoldSignature, r: int) -> list[BranchPlacement]:
    """All placement classes compatible with divisibility and parity.

    For even ``r`` the parity of the quotient degree sum is fixed by the
    placement alone and infeasible classes are dropped here.  For odd ``r``
    it also depends on the number of regular vertices, so the check is left
    to :func:`shape_of`.
    """
    if r < 3:
        raise ValueError(f"regular degree must be >= 3, got {r}")
    per_index = []
    for m, count in sorted(Counter(sig.branch_indices).items()):
        per_index.append([
            [(m, loc) for loc in combo]
            for combo in itertools.combinations_with_replacement(_allowed(m, r), count)
        ])
    out = []
    for combo in itertools.product(*per_index):
        placement = BranchPlacement.of(p for group in combo for p in group)
        if r % 2 == 0:
            odd = sum(r // m for m in placement.at(Location.VERTEX)) + placement.dangling
            if odd % 2:
                continue
        out.append(placement)
    return out


@dataclass(frozen=True)
class QuotientShape:
    v_prime: int                  # quotient vertices (dangling ends excluded)
    e_full: int
    e_dang: int
    f_prime: int
    regular_vertices: int
    special_degrees: tuple[int, ...]
    face_branch: tuple[int, ...]
    root_positions: int

    @property
    def n_prime(self) -> int:
        """Edge count once each dangling semi-edge is closed off by a leaf."""
        return self.e_full + self.e_dang

    def handshake_ok(self, r: int) -> bool:
        degrees = r * self.regular_vertices + sum(self.special_degrees)
        return (degrees + self.e_dang == 2 * self.n_prime
                and degrees == self.root_positions
                and self.v_prime == self.regular_vertices + len(self.special_degrees))

    def euler_ok(self) -> bool:
        return (self.v_prime + self.e_dang) - self.n_prime + self.f_prime == 2

    def lifts_to(self, sig: OrbifoldSignature, r: int, v: int, vertex_indices) -> bool:
        L = sig.period
        lifted_v = L * self.regular_vertices + sum(L // m for m in vertex_indices)
        return lifted_v == v and r * v == 2 * (L * self.e_full + (L // 2) * self.e_dang)


def shape_of(placement: BranchPlacement, sig: OrbifoldSignature, r: int, v: int) -> QuotientShape | None:
    """Solve for the quotient-map parameters, or None when they are not integral."""
    if (r * v) % 2 or v < 1:
        return None
    L = sig.period
    on_vertices = placement.at(Location.VERTEX)
    k = placement.dangling
    darts = as_int(r * v // L) if (r * v) % L == 0 else None
    spare = v - sum(L // m for m in on_vertices)
    if darts is None or spare < 0 or spare % L:
        return None
    regular = spare // L
    if darts < k or (darts - k) % 2:
        return None
    e_full = (darts - k) // 2
    v_prime = regular + len(on_vertices)
    f_prime = 2 - v_prime + e_full
    if f_prime < 1:
        return None
    return QuotientShape(
        v_prime=v_prime,
        e_full=e_full,
        e_dang=k,
        f_prime=f_prime,
        regular_vertices=regular,
        special_degrees=tuple(r // m for m in on_vertices),
        face_branch=tuple(placement.at(Location.FACE)),
        root_positions=darts,
    )


def face_placements(f_prime: int, indices) -> int:
    """Ways to put branch points into distinct faces, equal indices unordered."""
    ways = math.perm(f_prime, len(indices)) if f_prime >= len(indices) else 0
    for c in Counter(indices).values():
        ways //= math.factorial(c)
    return ways


class ConstrainedCounter:
    """Rooted planar maps with coloured special vertices.

    ``degrees[c]`` is the degree of colour ``c``; vertices of one colour are
    indistinguishable.  ``F(n, d, K)`` counts maps with ``n`` edges whose root
    vertex has degree ``d``, with ``K[c]`` further vertices of colour ``c``
    and all remaining vertices of degree ``r``.  Removing the root edge gives

    * an edge to a regular vertex: contract, root degree ``d + r - 2``;
    * an edge to a colour-``c`` vertex: contract, root degree ``d + deg_c - 2``;
    * a loop: the sphere splits in two and the special vertices are shared
      out between the halves in every possible way.

    Rows for every sub-multiset of ``caps`` are built together, one edge
    count at a time.
    """

    def __init__(self, r: int, degrees, caps):
        if r < 3:
            raise ValueError(f"regular degree must be >= 3, got {r}")
        if len(degrees) != len(caps):
            raise ValueError("degrees and caps differ in length")
        if any(not 1 <= dg < r for dg in degrees):
            raise ValueError(f"special degrees must lie in [1, r), got {degrees}")
        self.r = r
        self.degrees = tuple(degrees)
        self.caps = tuple(caps)
        self.keys = list(itertools.product(*(range(c + 1) for c in self.caps)))
        self._splits = {
            K: [(K1, tuple(a - b for a, b in zip(K, K1)))
                for K1 in itertools.product(*(range(c + 1) for c in K))]
            for K in self.keys
        }
        empty = tuple(0 for _ in self.caps)
        self.rows = {K: [(1,) if K == empty else (0,)] for K in self.keys}
        self._sparse = {K: [tuple((d, x) for d, x in enumerate(self.rows[K][0]) if x)] for K in self.keys}
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(next(iter(self.rows.values()))) - 1

    def _grow(self, n_max: int) -> None:
        from mapcensus.recurrences import _convolve  # shared sparse kernel

        r = self.r
        for n in range(self.n_max + 1, n_max + 1):
            fresh = {}
            for K in self.keys:
                loop = [0] * (2 * n - 1)
                for K1, K2 in self._splits[K]:
                    part = _convolve(self._sparse[K1], self._sparse[K2], n - 1)
                    for j, x in enumerate(part):
                        if x:
                            loop[j] += x
                prev = self.rows[K][n - 1]
                row = [0] * (2 * n + 1)
                for d in range(1, 2 * n + 1):
                    x = prev[d + r - 2] if d + r - 2 < len(prev) else 0
                    if d >= 2:
                        x += loop[d - 2]
                    for c, count in enumerate(K):
                        if count:
                            smaller = K[:c] + (count - 1,) + K[c + 1:]
                            srow = self.rows[smaller][n - 1]
                            j = d + self.degrees[c] - 2
                            if 0 <= j < len(srow):
                                x += srow[j]
                    row[d] = x
                fresh[K] = tuple(row)
            for K in self.keys:
                self.rows[K].append(fresh[K])
                self._sparse[K].append(tuple((d, x) for d, x in enumerate(fresh[K]) if x))

    def F(self, n: int, d: int, K) -> int:
        K = tuple(K)
        if n < 0 or d < 0 or any(k < 0 for k in K):
            return 0
        if any(k > c for k, c in zip(K, self.caps)):
            raise ValueError(f"{K} exceeds the counter's capacity {self.caps}")
        with self._lock:
            if n > self.n_max:
                self._grow(n)
            row = self.rows[K][n]
        return row[d] if d < len(row) else 0


_COUNTERS: dict[tuple, ConstrainedCounter] = {}
_COUNTERS_LOCK = threading.Lock()


def _counter(r: int, degrees, caps) -> ConstrainedCounter:
    key = (r, tuple(degrees), tuple(caps))
    with _COUNTERS_LOCK:
        if key not in _COUNTERS:
            _COUNTERS[key] = ConstrainedCounter(r, degrees, caps)
        return _COUNTERS[key]


def constrained_sphere_count(r: int, special_degrees, leaves: int, e_total: int) -> int:
    """Rooted planar maps with prescribed special vertices and leaves.

    Counts maps with ``e_total`` edges, one vertex for each entry of
    ``special_degrees`` (equal degrees are interchangeable), ``leaves``
    further degree-1 vertices and every other vertex of degree ``r``.  The
    root may be any dart except those at the leaves.
    """
    if leaves < 0 or e_total < 0:
        return 0
    counts = Counter(special_degrees)
    degrees = sorted(counts)
    caps = [counts[dg] for dg in degrees]
    K = tuple(caps) + (leaves,)
    C = _counter(r, tuple(degrees) + (1,), K)
    total = C.F(e_total, r, K)
    for c in range(len(degrees)):
        smaller = K[:c] + (K[c] - 1,) + K[c + 1:]
        total += C.F(e_total, degrees[c], smaller)
    return total


def count_placement(placement: BranchPlacement, sig: OrbifoldSignature, r: int, v: int) -> int:
    """Rooted quotient maps realising one placement class."""
    shape = shape_of(placement, sig, r, v)
    if shape is None:
        return 0
    ways = face_placements(shape.f_prime, shape.face_branch)
    if not ways:
        return 0
    return ways * constrained_sphere_count(r, shape.special_degrees, shape.e_dang, shape.n_prime)


def count_quotient_maps(sig: OrbifoldSignature, r: int, v: int) -> int:
    """Rooted quotient maps on ``sig`` lifting to r-regular maps with ``v`` vertices."""
    if (r * v) % 2:
        return 0
    return sum(count_placement(p, sig, r, v) for p in enumerate_placements(sig, r))
