"""Embedded oscillator catalog: Gallery patterns plus the first-known table.

The data lives in ``data/`` as one RLE file per embedded pattern and a JSON
manifest carrying period/name/discoverer/year plus bookkeeping fields:

* ``role``: "first-known" (a row of the first-known-oscillators table),
  "figure" (other patterns shown in the paper), "fixture" (embedded for a
  tool, e.g. the Snark reflector figure, which includes an in-flight glider
  and is not itself an oscillator), or "appendix-row" (table rows with no
  pattern to embed, e.g. parametric families).
* ``verify``: whether verify_catalog must confirm the stated period.
* ``period_label``: textual period for parametric rows ("50+40n", ...).

verify_catalog re-simulates every verifiable entry and compares the
detected period against the manifest; any mismatch is a failure.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .analysis import OSCILLATOR, detect_dynamics
from .core import LifeError, Pattern
from .rle import parse_rle


class CatalogError(LifeError):
    """Unknown entry or malformed embedded data."""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    name: str
    discoverer: str
    year: str
    period: int | None
    period_label: str
    rle: str | None
    role: str
    verifiable: bool
    note: str | None = None

    def pattern(self) -> Pattern:
        if self.rle is None:
            raise CatalogError(f"entry {self.id!r} has no embedded pattern")
        return parse_rle(self.rle).pattern


def _data_text(name: str) -> str:
    return (resources.files(__package__) / "data" / name).read_text()


@lru_cache(maxsize=1)
def load_catalog() -> tuple[CatalogEntry, ...]:
    manifest = json.loads(_data_text("manifest.json"))
    entries = []
    for row in manifest["entries"]:
        rle = _data_text(row["file"]) if row.get("file") else None
        entries.append(
            CatalogEntry(
                id=row["id"],
                name=row["name"],
                discoverer=row["discoverer"],
                year=row["year"],
                period=row.get("period"),
                period_label=row.get("period_label", str(row.get("period"))),
                rle=rle,
                role=row["role"],
                verifiable=bool(row.get("verify")),
                note=row.get("note"),
            )
        )
    return tuple(entries)


def catalog_entry(entry_id: str) -> CatalogEntry:
    for entry in load_catalog():
        if entry.id == entry_id:
            return entry
    raise CatalogError(f"no catalog entry with id {entry_id!r}")


def catalog_pattern(entry_id: str) -> Pattern:
    return catalog_entry(entry_id).pattern()


def catalog_lookup(period: int) -> list[CatalogEntry]:
    """All embedded entries with the given period (may be empty)."""
    return [e for e in load_catalog() if e.period == period]


def first_known(period: int) -> CatalogEntry:
    """The first-known-table entry for a period, which must carry a pattern."""
    for entry in load_catalog():
        if entry.period == period and entry.role == "first-known":
            return entry
    raise CatalogError(f"no first-known catalog entry for period {period}")


@dataclass(frozen=True)
class EntryResult:
    id: str
    name: str
    expected_period: int
    detected_kind: str
    detected_period: int | None
    ok: bool


@dataclass(frozen=True)
class CatalogReport:
    results: tuple[EntryResult, ...]
    ok: bool

    @property
    def failed(self) -> tuple[EntryResult, ...]:
        return tuple(r for r in self.results if not r.ok)


def _verify_one(args: tuple[str, str, str, int]) -> EntryResult:
    entry_id, name, rle, expected = args
    pattern = parse_rle(rle).pattern
    report = detect_dynamics(pattern, max_gens=4 * expected + 64)
    ok = report.kind == OSCILLATOR and report.period == expected
    return EntryResult(
        id=entry_id,
        name=name,
        expected_period=expected,
        detected_kind=report.kind,
        detected_period=report.period,
        ok=ok,
    )


def verify_catalog(jobs: int = 1, entries: tuple[CatalogEntry, ...] | None = None) -> CatalogReport:
    """Re-simulate every verifiable entry; any period mismatch fails.

    Results are aggregated in a deterministic order (period, then name)
    regardless of the worker count.
    """
    if entries is None:
        entries = load_catalog()
    todo = sorted(
        (e for e in entries if e.verifiable),
        key=lambda e: (e.period if e.period is not None else 0, e.name),
    )
    args = [(e.id, e.name, e.rle, e.period) for e in todo]
    if jobs <= 1:
        results = [_verify_one(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_one, args))
    return CatalogReport(results=tuple(results), ok=all(r.ok for r in results))
