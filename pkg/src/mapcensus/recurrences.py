"""Edge-contraction recurrences for near-r-regular rooted maps.

Each counting family is a table ``cell(n, d)``: the number of rooted maps
with ``n`` edges whose root vertex has degree ``d`` and whose remaining
vertices have degree ``r`` (with the family-specific extra vertices).
Tables are filled row by row; row ``n`` only reads rows ``< n``.

Families
--------
``s``   sphere, single root vertex
``q_i`` sphere, a second root dart at another vertex, of degree ``i``
``d``   sphere, a second root dart at another vertex; ``d`` is the total
        degree of the two root vertices
``t``   torus, ``p`` projective plane, ``b`` Klein bottle
``hatq2``, ``hatq3``  (r = 4 only) sphere with two / three extra leaves

The loop terms of every recurrence are two-dimensional convolutions
``sum_{i,j} X[n-1-i][d-2-j] * Y[i][j]``; they are evaluated a whole row at a
time over the nonzero entries only, which keeps r = 5 with 50 edges well
under a second.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cached_property

SURFACES = ("sphere", "torus", "projective", "klein")
KINDS = ("S", "D", "Q", "HATQ2", "HATQ3")

_SURFACE_SYMBOL = {"sphere": "s", "torus": "t", "projective": "p", "klein": "b"}


class NegativeCountError(ArithmeticError):
    """A recurrence produced a negative cell, i.e. a transcription error."""


@dataclass(frozen=True)
class FamilyId:
    surface: str
    kind: str
    r: int
    i: int = 0

    def __post_init__(self):
        if self.surface not in SURFACES:
            raise ValueError(f"unknown surface {self.surface!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.r < 3:
            raise ValueError(f"regular degree must be >= 3, got {self.r}")
        if self.kind == "Q" and self.i < 1:
            raise ValueError("Q family needs a second-root degree i >= 1")
        if self.kind in ("HATQ2", "HATQ3") and self.r != 4:
            raise ValueError("leaf families are only defined for r = 4")
        if self.kind != "S" and self.surface != "sphere":
            raise ValueError(f"{self.kind} family lives on the sphere only")

    @property
    def symbol(self) -> str:
        if self.kind == "S":
            return _SURFACE_SYMBOL[self.surface]
        if self.kind == "Q":
            return f"q{self.i}"
        return {"D": "d", "HATQ2": "hatq2", "HATQ3": "hatq3"}[self.kind]


@dataclass(frozen=True)
class DegreeTable:
    """Immutable table of counts indexed by (edges, root degree)."""

    family: FamilyId
    n_max: int
    rows: tuple[tuple[int, ...], ...] = field(repr=False)

    def cell(self, n: int, d: int) -> int:
        if n < 0 or d < 0 or n > self.n_max:
            return 0
        row = self.rows[n]
        return row[d] if d < len(row) else 0

    __call__ = cell

    @cached_property
    def sparse(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return tuple(_nonzero(row) for row in self.rows)

    def regular(self, v: int) -> int:
        """Rooted r-regular maps with ``v`` vertices (cell ``(r*v/2, r)``)."""
        r = self.family.r
        if v < 1 or (r * v) % 2:
            return 0
        n = r * v // 2
        if n > self.n_max:
            raise ValueError(f"table for {self.family.symbol} only reaches n = {self.n_max}, need {n}")
        return self.cell(n, r)

    def nonzero_cells(self):
        for n, row in enumerate(self.rows):
            for d, value in enumerate(row):
                if value:
                    yield n, d, value


def _nonzero(row) -> tuple[tuple[int, int], ...]:
    return tuple((d, x) for d, x in enumerate(row) if x)


def _convolve(xs, ys, m: int) -> list[int]:
    """Row ``m`` of the product of two sparse bivariate series."""
    out = [0] * (2 * m + 1)
    for i in range(m + 1):
        a, b = xs[m - i], ys[i]
        if not a or not b:
            continue
        for ja, x in a:
            for jb, y in b:
                out[ja + jb] += x * y
    return out


class _Growing:
    """A table under construction; exposes the same reads as DegreeTable."""

    def __init__(self, family: FamilyId, row0):
        self.family = family
        self.rows = [tuple(row0)]
        self.sparse = [_nonzero(row0)]

    def cell(self, n, d):
        if n < 0 or d < 0 or n >= len(self.rows):
            return 0
        row = self.rows[n]
        return row[d] if d < len(row) else 0

    def push(self, row):
        n = len(self.rows)
        for d, x in enumerate(row):
            if x < 0:
                raise NegativeCountError(
                    f"negative intermediate count {self.family.symbol}[{n},{d}] = {x}")
        self.rows.append(tuple(row))
        self.sparse.append(_nonzero(row))

    def freeze(self) -> DegreeTable:
        return DegreeTable(self.family, len(self.rows) - 1, tuple(self.rows))


def _loop(c: list[int], d: int) -> int:
    return c[d - 2] if d >= 2 else 0


def _check_r(r):
    if r < 3:
        raise ValueError(f"regular degree must be >= 3, got {r}")


def _need(table: DegreeTable | None, n_max: int, build, *args) -> DegreeTable:
    if table is None or table.n_max < n_max:
        return build(*args)
    return table


def build_s(r: int, n_max: int) -> DegreeTable:
    _check_r(r)
    g = _Growing(FamilyId("sphere", "S", r), [1])
    for n in range(1, n_max + 1):
        conv = _convolve(g.sparse, g.sparse, n - 1)
        g.push([0] + [g.cell(n - 1, d + r - 2) + _loop(conv, d) for d in range(1, 2 * n + 1)])
    return g.freeze()


def build_q(r: int, i: int, n_max: int, s: DegreeTable | None = None) -> DegreeTable:
    """Sphere maps with a second root dart at a vertex of degree ``i``."""
    _check_r(r)
    s = _need(s, n_max, build_s, r, n_max)
    g = _Growing(FamilyId("sphere", "Q", r, i), [0])
    for n in range(1, n_max + 1):
        conv = _convolve(g.sparse, s.sparse, n - 1)
        g.push([0] + [
            g.cell(n - 1, d + r - 2) + i * s.cell(n - 1, d + i - 2) + 2 * _loop(conv, d)
            for d in range(1, 2 * n + 1)
        ])
    return g.freeze()


def build_d(r: int, n_max: int, s: DegreeTable | None = None,
            qs: dict[int, DegreeTable] | None = None) -> DegreeTable:
    _check_r(r)
    s = _need(s, n_max, build_s, r, n_max)
    qs = dict(qs or {})
    for i in range(1, r - 1):
        qs[i] = _need(qs.get(i), n_max, build_q, r, i, n_max, s)
    g = _Growing(FamilyId("sphere", "D", r), [0])
    for n in range(1, n_max + 1):
        conv = _convolve(s.sparse, g.sparse, n - 1)
        row = [0]
        for d in range(1, 2 * n + 1):
            # splitting the merged vertex is impossible when the first root is too small
            too_small = sum(qs[i].cell(n - 1, d + r - 2 - i) for i in range(1, r - 1))
            row.append(g.cell(n - 1, d + r - 2) - too_small
                       + d * (d - 1) // 2 * s.cell(n - 1, d - 2) + 2 * _loop(conv, d))
        g.push(row)
    return g.freeze()


def build_t(r: int, n_max: int, s: DegreeTable | None = None,
            dd: DegreeTable | None = None) -> DegreeTable:
    _check_r(r)
    s = _need(s, n_max, build_s, r, n_max)
    dd = _need(dd, n_max, build_d, r, n_max, s)
    g = _Growing(FamilyId("torus", "S", r), [0])
    for n in range(1, n_max + 1):
        conv = _convolve(s.sparse, g.sparse, n - 1)
        g.push([0] + [
            g.cell(n - 1, d + r - 2) + dd.cell(n - 1, d - 2) + 2 * _loop(conv, d)
            for d in range(1, 2 * n + 1)
        ])
    return g.freeze()


def build_p(r: int, n_max: int, s: DegreeTable | None = None) -> DegreeTable:
    _check_r(r)
    s = _need(s, n_max, build_s, r, n_max)
    g = _Growing(FamilyId("projective", "S", r), [0])
    for n in range(1, n_max + 1):
        conv = _convolve(s.sparse, g.sparse, n - 1)
        g.push([0] + [
            g.cell(n - 1, d + r - 2) + (d - 1) * s.cell(n - 1, d - 2) + 2 * _loop(conv, d)
            for d in range(1, 2 * n + 1)
        ])
    return g.freeze()


def build_b(r: int, n_max: int, s: DegreeTable | None = None, p: DegreeTable | None = None,
            dd: DegreeTable | None = None) -> DegreeTable:
    _check_r(r)
    s = _need(s, n_max, build_s, r, n_max)
    p = _need(p, n_max, build_p, r, n_max, s)
    dd = _need(dd, n_max, build_d, r, n_max, s)
    g = _Growing(FamilyId("klein", "S", r), [0])
    for n in range(1, n_max + 1):
        conv_sb = _convolve(s.sparse, g.sparse, n - 1)
        conv_pp = _convolve(p.sparse, p.sparse, n - 1)
        g.push([0] + [
            g.cell(n - 1, d + r - 2) + (d - 1) * p.cell(n - 1, d - 2) + dd.cell(n - 1, d - 2)
            + _loop(conv_pp, d) + 2 * _loop(conv_sb, d)
            for d in range(1, 2 * n + 1)
        ])
    return g.freeze()


def build_hatq2(n_max: int, s: DegreeTable | None = None,
                q1: DegreeTable | None = None) -> DegreeTable:
    """r = 4 sphere maps with two extra (unlabelled) leaves."""
    s = _need(s, n_max, build_s, 4, n_max)
    q1 = _need(q1, n_max, build_q, 4, 1, n_max, s)
    g = _Growing(FamilyId("sphere", "HATQ2", 4), [0])
    for n in range(1, n_max + 1):
        conv_hs = _convolve(g.sparse, s.sparse, n - 1)
        conv_qq = _convolve(q1.sparse, q1.sparse, n - 1)
        row = [0] + [
            g.cell(n - 1, d + 2) + q1.cell(n - 1, d - 1)
            + 2 * _loop(conv_hs, d) + _loop(conv_qq, d)
            for d in range(1, 2 * n + 1)
        ]
        if n == 2:
            row[2] = 1
        g.push(row)
    return g.freeze()


def build_hatq3(n_max: int, s: DegreeTable | None = None, q1: DegreeTable | None = None,
                hatq2: DegreeTable | None = None) -> DegreeTable:
    """r = 4 sphere maps with three extra (unlabelled) leaves."""
    s = _need(s, n_max, build_s, 4, n_max)
    q1 = _need(q1, n_max, build_q, 4, 1, n_max, s)
    hatq2 = _need(hatq2, n_max, build_hatq2, n_max, s, q1)
    g = _Growing(FamilyId("sphere", "HATQ3", 4), [0])
    for n in range(1, n_max + 1):
        conv_hs = _convolve(g.sparse, s.sparse, n - 1)
        conv_qh = _convolve(q1.sparse, hatq2.sparse, n - 1)
        row = [0] + [
            g.cell(n - 1, d + 2) + hatq2.cell(n - 1, d - 1)
            + 2 * (_loop(conv_hs, d) + _loop(conv_qh, d))
            for d in range(1, 2 * n + 1)
        ]
        if n == 3:
            row[3] = 1
        g.push(row)
    return g.freeze()


class TableSet:
    """All families for one degree ``r``, grown on demand and shared."""

    def __init__(self, r: int):
        _check_r(r)
        self.r = r
        self._tables: dict[str, DegreeTable] = {}
        self._lock = threading.Lock()

    def _get(self, name: str, n_max: int) -> DegreeTable:
        have = self._tables.get(name)
        if have is not None and have.n_max >= n_max:
            return have
        n_max = max(n_max, have.n_max if have else 0)
        r = self.r
        if name == "s":
            table = build_s(r, n_max)
        elif name.startswith("q"):
            table = build_q(r, int(name[1:]), n_max, self._get("s", n_max))
        elif name == "d":
            qs = {i: self._get(f"q{i}", n_max) for i in range(1, r - 1)}
            table = build_d(r, n_max, self._get("s", n_max), qs)
        elif name == "t":
            table = build_t(r, n_max, self._get("s", n_max), self._get("d", n_max))
        elif name == "p":
            table = build_p(r, n_max, self._get("s", n_max))
        elif name == "b":
            table = build_b(r, n_max, self._get("s", n_max), self._get("p", n_max),
                            self._get("d", n_max))
        elif name == "hatq2":
            table = build_hatq2(n_max, self._get("s", n_max), self._get("q1", n_max))
        elif name == "hatq3":
            table = build_hatq3(n_max, self._get("s", n_max), self._get("q1", n_max),
                                self._get("hatq2", n_max))
        else:
            raise KeyError(name)
        self._tables[name] = table
        return table

    def get(self, name: str, n_max: int) -> DegreeTable:
        with self._lock:
            return self._get(name, n_max)

    def surface(self, surface: str, n_max: int) -> DegreeTable:
        return self.get(_SURFACE_SYMBOL[surface], n_max)

    def install(self, table: DegreeTable) -> None:
        """Adopt a table loaded from elsewhere (e.g. the on-disk cache)."""
        if table.family.r != self.r:
            raise ValueError("degree mismatch")
        with self._lock:
            have = self._tables.get(table.family.symbol)
            if have is None or have.n_max < table.n_max:
                self._tables[table.family.symbol] = table


_ENGINES: dict[int, TableSet] = {}
_ENGINES_LOCK = threading.Lock()


def engine(r: int) -> TableSet:
    with _ENGINES_LOCK:
        if r not in _ENGINES:
            _ENGINES[r] = TableSet(r)
        return _ENGINES[r]


def rooted_regular(surface: str, r: int, v: int) -> int:
    """Rooted r-regular maps with ``v`` vertices on ``surface``."""
    if surface not in SURFACES:
        raise ValueError(f"unknown surface {surface!r}")
    if v < 1 or (r * v) % 2:
        return 0
    n = r * v // 2
    return engine(r).surface(surface, n).cell(n, r)
