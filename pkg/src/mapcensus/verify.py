"""Comparison suites behind ``mapcensus verify``."""

from __future__ import annotations

from typing import Iterator, NamedTuple

from mapcensus import closed_forms as cf
from mapcensus.golden import golden_values, row_vertices
from mapcensus.oracle import (
    DEFAULT_MAX_DARTS,
    constrained_oracle,
    count_rooted_oracle,
    count_sensed_oracle,
)
from mapcensus.orbifolds import constrained_sphere_count
from mapcensus.recurrences import engine, rooted_regular
from mapcensus.sensed import sensed_general, sensed_tau3, sensed_tau4

SUITES = ("tables", "crosscheck", "oracle", "all")
SURFACE_LETTER = {"sphere": "sigma", "torus": "tau", "projective": "pi", "klein": "kappa"}


class Comparison(NamedTuple):
    family: str
    index: int
    expected: int
    got: int

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.family} {self.index} expected={self.expected} got={self.got}"


def rooted_tag(surface: str, r: int) -> str:
    return f"{SURFACE_LETTER[surface]}.rooted.{surface}.r{r}"


def sensed_tag(r: int) -> str:
    return f"tau.sensed.torus.r{r}"


def sensed_value(r: int, v: int) -> int:
    """Sensed torus count, by closed formula where one exists."""
    if r == 4:
        return sensed_tau4(v)
    if r == 3:
        return sensed_tau3(v)
    return sensed_general(r, v)


def suite_tables() -> Iterator[Comparison]:
    for g in golden_values():
        v = g.vertices
        if g.table.startswith("rooted."):
            surface = g.table.split(".")[1]
            yield Comparison(rooted_tag(surface, g.r), g.index, g.value, rooted_regular(surface, g.r, v))
        else:
            yield Comparison(sensed_tag(g.r), g.index, g.value, sensed_value(g.r, v))


def _closed_form_pairs():
    for v in range(1, 11):
        yield "sigma4", v, cf.sigma4(v), rooted_regular("sphere", 4, v)
        yield "tau4", v, cf.tau4(v), rooted_regular("torus", 4, v)
        yield "pi4", v, cf.pi4(v), rooted_regular("projective", 4, v)
        yield "kappa4", v, cf.kappa4(v), rooted_regular("klein", 4, v)
    for n in range(1, 11):
        v = 2 * n
        yield "sigma3", n, cf.sigma3(n), rooted_regular("sphere", 3, v)
        yield "tau3", n - 1, cf.tau3(n - 1), rooted_regular("torus", 3, v)
        yield "pi3", n, cf.pi3(n), rooted_regular("projective", 3, v)
        yield "kappa3", n, cf.kappa3(n), rooted_regular("klein", 3, v)


def suite_crosscheck() -> Iterator[Comparison]:
    for tag, index, closed, recurrence in _closed_form_pairs():
        yield Comparison(f"{tag}.closed_vs_recurrence", index, recurrence, closed)
    yield Comparison("t.r4.cell.20.4", 20, cf.tau4(10), engine(4).get("t", 20).cell(20, 4))
    for k in range(1, 11):
        yield Comparison("tau.sensed.torus.r4.general_vs_closed", k, sensed_tau4(k), sensed_general(4, k))
        yield Comparison("tau.sensed.torus.r3.general_vs_closed", k,
                         sensed_tau3(2 * k), sensed_general(3, 2 * k))


CONSTRAINED_CASES = (
    (3, (), 1, 2), (3, (), 1, 5), (3, (1,), 1, 4), (3, (1, 1), 0, 4),
    (4, (), 2, 3), (4, (2,), 2, 4), (4, (2, 2), 0, 4), (4, (1,), 1, 5),
    (5, (), 2, 6), (6, (3, 2), 1, 6), (6, (2, 2, 2), 0, 6), (6, (3,), 3, 6),
)


def suite_oracle(max_darts: int = DEFAULT_MAX_DARTS) -> Iterator[Comparison]:
    for r in (3, 4, 5, 6):
        for darts in range(r, max_darts + 1, r):
            if darts % 2:
                continue
            n, v = darts // 2, darts // r
            for genus, surface in ((0, "sphere"), (1, "torus")):
                yield Comparison(f"oracle.rooted.g{genus}.r{r}", v,
                                 rooted_regular(surface, r, v), count_rooted_oracle(genus, r, n, max_darts))
            yield Comparison(f"oracle.sensed.g1.r{r}", v,
                             sensed_general(r, v), count_sensed_oracle(1, r, n, max_darts))
    for r, special, leaves, edges in CONSTRAINED_CASES:
        if 2 * edges > max_darts:
            continue
        tag = f"oracle.constrained.r{r}.{'-'.join(map(str, special)) or 'none'}.l{leaves}"
        yield Comparison(tag, edges, constrained_oracle(r, special, leaves, edges, max_darts),
                         constrained_sphere_count(r, special, leaves, edges))


def run_suite(name: str, max_darts: int = DEFAULT_MAX_DARTS) -> Iterator[Comparison]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name in ("tables", "all"):
        yield from suite_tables()
    if name in ("crosscheck", "all"):
        yield from suite_crosscheck()
    if name in ("oracle", "all"):
        yield from suite_oracle(max_darts)


def rows_for(r: int, v_max: int) -> list[tuple[int, int]]:
    """Table row index and vertex count for rows 1..v_max."""
    return [(k, row_vertices(r, k)) for k in range(1, v_max + 1)]
