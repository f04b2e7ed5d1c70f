"""Eighteen small graphs that cannot occur as induced subgraphs of a class member.

Each entry has either lambda_2 > 1 or lambda_{n-1} < -1, so by interlacing
it cannot sit inside a graph whose only eigenvalues besides +/-1 are one
r > 1 and one s < -1.  The printed approximate eigenvalue acts as a checksum
on the edge lists.  Letters I and O are not used.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import IO

from . import graph6
from .graph import Graph, VertexSet
from .iso import all_induced_witnesses, contains_induced
from .poly import ROOT_TOLERANCE, RootCounter, evaluate
from .spectra import char_poly

SECOND_LARGEST = "SecondLargest"
SECOND_SMALLEST = "SecondSmallest"
PRINTED_TOLERANCE = 5e-3

_ENTRIES: tuple[tuple[str, int, tuple[tuple[int, int], ...], str, str], ...] = (
    ("A", 5, ((0, 1), (0, 2), (1, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.62"),
    ("B", 5, ((0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.17"),
    ("C", 5, ((0, 2), (1, 3), (2, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.30"),
    ("D", 5, ((0, 2), (0, 3), (1, 3), (2, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.27"),
    ("E", 5, ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.47"),
    ("F", 5, ((0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)), SECOND_SMALLEST, "-1.24"),
    ("G", 6, ((0, 2), (0, 4), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5)), SECOND_LARGEST, "1.26"),
    ("H", 6, ((0, 2), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5)), SECOND_LARGEST, "1.51"),
    ("J", 6, ((0, 2), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5), (4, 5)), SECOND_LARGEST, "1.34"),
    ("K", 6, ((0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5), (4, 5)), SECOND_LARGEST, "1.73"),
    ("L", 6, ((0, 2), (0, 4), (1, 5), (2, 4), (3, 5), (4, 5)), SECOND_LARGEST, "1.26"),
    ("M", 6, ((0, 2), (0, 4), (1, 4), (1, 5), (2, 4), (3, 5)), SECOND_LARGEST, "1.36"),
    ("N", 6, ((0, 2), (1, 4), (1, 5), (2, 4), (3, 5)), SECOND_LARGEST, "1.25"),
    ("P", 6, ((0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5)), SECOND_LARGEST, "2"),
    ("Q", 6, ((0, 2), (0, 4), (1, 5), (2, 4), (3, 5)), SECOND_LARGEST, "1.41"),
    ("R", 6, ((0, 4), (1, 5), (2, 4), (3, 5)), SECOND_LARGEST, "1.41"),
    ("S", 7, ((0, 1), (0, 2), (0, 3), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 5)),
     SECOND_LARGEST, "1.25"),
    ("T", 7, ((0, 2), (0, 3), (0, 6), (1, 3), (2, 3), (2, 6), (3, 4), (3, 5)), SECOND_LARGEST, "1.18"),
)

# printed as an exact value rather than an approximation
_EXACT = {"P"}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    bound_kind: str
    printed_value: str

    @property
    def exact(self) -> bool:
        return self.name in _EXACT

    @property
    def root_index(self) -> int:
        """Position of the bounded eigenvalue, counted from the largest."""
        return 2 if self.bound_kind == SECOND_LARGEST else self.graph.n - 1


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    return tuple(
        CatalogEntry(name, Graph.from_edges(n, edges), kind, value)
        for name, n, edges, kind, value in _ENTRIES
    )


def entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)


@dataclass(frozen=True)
class EntryCheck:
    name: str
    bound_kind: str
    printed_value: str
    interval: tuple[Fraction, Fraction]
    bound_ok: bool
    printed_match: bool

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.printed_match

    @property
    def estimate(self) -> float:
        return float((self.interval[0] + self.interval[1]) / 2)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "bound_kind": self.bound_kind,
            "printed_value": self.printed_value,
            "interval": [f"{float(self.interval[0]):.10f}", f"{float(self.interval[1]):.10f}"],
            "bound_ok": self.bound_ok,
            "printed_match": self.printed_match,
        }


def check_entry(e: CatalogEntry) -> EntryCheck:
    cp = char_poly(e.graph)
    rc = RootCounter(cp)
    if e.bound_kind == SECOND_LARGEST:
        bound_ok = rc.above(1) >= 2
    else:
        # at least two eigenvalues strictly below -1
        bound_ok = rc.degree - rc.above(-1, strict=False) >= 2
    lo, hi = rc.kth_largest(e.root_index, ROOT_TOLERANCE)
    printed = Fraction(e.printed_value)
    if e.exact:
        # root exactly at the printed value and it is the indexed one
        match = evaluate(cp, printed) == 0 and lo < printed <= hi
    else:
        match = abs(float((lo + hi) / 2) - float(printed)) <= PRINTED_TOLERANCE
    return EntryCheck(e.name, e.bound_kind, e.printed_value, (lo, hi), bound_ok, match)


@dataclass(frozen=True)
class CatalogReport:
    checks: tuple[EntryCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.ok]


def validate_catalog() -> CatalogReport:
    return CatalogReport(tuple(check_entry(e) for e in catalog()))


def scan_forbidden(g: Graph, all_witnesses: bool = False) -> list[tuple[str, list[VertexSet]]]:
    """Catalog entries present as induced subgraphs, with the first (or every) witness."""
    hits = []
    for e in catalog():
        if e.graph.n > g.n:
            continue
        if all_witnesses:
            ws = all_induced_witnesses(g, e.graph)
            if ws:
                hits.append((e.name, ws))
        else:
            w = contains_induced(g, e.graph)
            if w is not None:
                hits.append((e.name, [w]))
    return hits


def export_catalog(graph_stream: IO[str], sidecar_stream: IO[str]) -> None:
    """graph6 lines in catalog order plus a JSON list of {name, bound_kind, printed_value}."""
    entries = catalog()
    graph6.write_graph6((e.graph for e in entries), graph_stream)
    json.dump(
        [{"name": e.name, "bound_kind": e.bound_kind, "printed_value": e.printed_value} for e in entries],
        sidecar_stream,
        indent=2,
    )
    sidecar_stream.write("\n")
