"""Reference values for the rooted and sensed tables, shipped as package data."""

from __future__ import annotations

import csv
from functools import lru_cache
from importlib import resources
from typing import NamedTuple


class GoldenValue(NamedTuple):
    table: str      # "rooted.torus", "rooted.projective", "rooted.klein", "sensed.torus"
    r: int
    index: int      # table row: 2*index vertices for odd r, index vertices for even r
    value: int

    @property
    def vertices(self) -> int:
        return row_vertices(self.r, self.index)


def row_vertices(r: int, index: int) -> int:
    return 2 * index if r % 2 else index


@lru_cache(maxsize=1)
def golden_values() -> tuple[GoldenValue, ...]:
    text = resources.files("mapcensus").joinpath("data/golden_tables.tsv").read_text()
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    reader = csv.DictReader(lines, delimiter="\t")
    return tuple(
        GoldenValue(row["table"], int(row["r"]), int(row["v"]), int(row["value"]))
        for row in reader
    )


def golden(table: str, r: int) -> dict[int, int]:
    return {g.index: g.value for g in golden_values() if g.table == table and g.r == r}
