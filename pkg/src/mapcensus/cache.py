"""On-disk cache of recurrence tables.

One text file per degree ``r``.  The first line is a header::

    #mapcensus-cache<TAB>version=1<TAB>r=4<TAB>n_max=20<TAB>families=s,t<TAB>sha256=...

followed by one ``family<TAB>n<TAB>d<TAB>value`` line per nonzero cell.
The checksum covers every body line.  Loading refuses a file whose
version, parameters or checksum are off and recomputes a few random cells
as a last sanity check.
"""

from __future__ import annotations

import hashlib
import logging
import os
import random
from pathlib import Path

from mapcensus.recurrences import DegreeTable, FamilyId, TableSet

log = logging.getLogger(__name__)

MAGIC = "#mapcensus-cache"
VERSION = 1
SPOT_CHECKS = 3


class CacheError(ValueError):
    pass


def family_from_symbol(symbol: str, r: int) -> FamilyId:
    surfaces = {"s": "sphere", "t": "torus", "p": "projective", "b": "klein"}
    if symbol in surfaces:
        return FamilyId(surfaces[symbol], "S", r)
    if symbol == "d":
        return FamilyId("sphere", "D", r)
    if symbol.startswith("q") and symbol[1:].isdigit():
        return FamilyId("sphere", "Q", r, int(symbol[1:]))
    if symbol in ("hatq2", "hatq3"):
        return FamilyId("sphere", symbol.upper(), r)
    raise CacheError(f"unknown family symbol {symbol!r}")


def cache_path(cache_dir, r: int) -> Path:
    return Path(cache_dir) / f"r{r}.tsv"


def _body(tables) -> list[str]:
    lines = []
    for table in tables:
        sym = table.family.symbol
        for n, d, value in table.nonzero_cells():
            lines.append(f"{sym}\t{n}\t{d}\t{value}")
    return lines


def _digest(lines) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode())
        h.update(b"\n")
    return h.hexdigest()


def cache_store(path, tables, n_max: int | None = None) -> Path:
    """Write ``tables`` (all for one r), truncated to ``n_max`` or their common size."""
    tables = list(tables)
    if not tables:
        raise ValueError("nothing to store")
    rs = {t.family.r for t in tables}
    if len(rs) != 1:
        raise ValueError(f"tables mix degrees {sorted(rs)}")
    common = min(t.n_max for t in tables)
    if n_max is None:
        n_max = common
    elif n_max > common:
        raise ValueError(f"tables only reach n = {common}, asked for {n_max}")
    tables = [DegreeTable(t.family, n_max, t.rows[: n_max + 1]) for t in tables]
    body = _body(tables)
    header = "\t".join([
        MAGIC,
        f"version={VERSION}",
        f"r={rs.pop()}",
        f"n_max={n_max}",
        "families=" + ",".join(t.family.symbol for t in tables),
        f"sha256={_digest(body)}",
    ])
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(header + "\n" + "".join(line + "\n" for line in body))
    os.replace(tmp, path)
    return path


def _parse_header(line: str) -> dict[str, str]:
    parts = line.rstrip("\n").split("\t")
    if not parts or parts[0] != MAGIC:
        raise CacheError("not a mapcensus cache file")
    fields = {}
    for part in parts[1:]:
        key, sep, value = part.partition("=")
        if not sep:
            raise CacheError(f"malformed header field {part!r}")
        fields[key] = value
    for key in ("version", "r", "n_max", "families", "sha256"):
        if key not in fields:
            raise CacheError(f"header lacks {key}")
    return fields


def cache_load(path, spot_checks: int = SPOT_CHECKS, rng=None) -> dict[str, DegreeTable]:
    """Read a cache file back into tables keyed by family symbol."""
    text = Path(path).read_text()
    lines = text.split("\n")
    header = _parse_header(lines[0])
    if int(header["version"]) != VERSION:
        raise CacheError(f"cache version {header['version']} != {VERSION}")
    r, n_max = int(header["r"]), int(header["n_max"])
    body = [line for line in lines[1:] if line]
    if _digest(body) != header["sha256"]:
        raise CacheError("checksum mismatch")
    symbols = header["families"].split(",")
    rows = {sym: [[0] * (2 * n + 1) for n in range(n_max + 1)] for sym in symbols}
    for line in body:
        try:
            sym, n, d, value = line.split("\t")
            rows[sym][int(n)][int(d)] = int(value)
        except (KeyError, IndexError, ValueError) as exc:
            raise CacheError(f"bad record {line!r}") from exc
    tables = {
        sym: DegreeTable(family_from_symbol(sym, r), n_max, tuple(tuple(row) for row in rows[sym]))
        for sym in symbols
    }
    _spot_check(tables, r, spot_checks, rng or random.Random())
    return tables


def _spot_check(tables, r: int, count: int, rng) -> None:
    cells = [(sym, n, d) for sym, t in tables.items() for n, d, _ in t.nonzero_cells()]
    if not cells or count <= 0:
        return
    fresh = TableSet(r)
    for sym, n, d in rng.sample(cells, min(count, len(cells))):
        expected = fresh.get(sym, n).cell(n, d)
        if tables[sym].cell(n, d) != expected:
            raise CacheError(f"cell {sym}[{n},{d}] does not match recomputation")
        log.debug("spot check %s[%d,%d] ok", sym, n, d)


def warm_engine(engine: TableSet, cache_dir, n_max: int, families) -> None:
    """Install cached tables into ``engine``, rebuilding and storing on a miss."""
    path = cache_path(cache_dir, engine.r)
    if path.exists():
        try:
            loaded = cache_load(path)
        except (CacheError, OSError) as exc:
            log.warning("ignoring cache %s: %s", path, exc)
        else:
            if all(sym in loaded and loaded[sym].n_max >= n_max for sym in families):
                for table in loaded.values():
                    engine.install(table)
                return
    tables = [engine.get(sym, n_max) for sym in families]
    cache_store(path, tables, n_max)
