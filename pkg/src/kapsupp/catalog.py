"""Catalog of forbidden configurations.

Each entry carries an explicit graph, the cycles whose relations are
enumerated, the published case counts and, for filter rows, the number of
census graphs the row removes.  Shapes live in ``data/catalog.json``; the
counts are cross-checked against :mod:`kapsupp.reference` when loading.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

import networkx as nx

from . import reference
from .census import SimpleGraph
from .cycles import CycleConfig, analyze_configuration, count_classes
from .fp import ClassifierConfig, DEFAULT_CONFIG
from .reference import FINITE_AND_SOLVABLE, FINITE_OR_SOLVABLE, VACUOUS

ELIMINATION_MODES = (FINITE_AND_SOLVABLE, FINITE_OR_SOLVABLE, VACUOUS)
FILTER, TRIANGLE, RECOGNIZER = "filter", "triangle", "recognizer"
FAMILIES = {"L_n": "prism", "M_n": "moebius"}


class CatalogError(ValueError):
    """Schema violation or disagreement with the published reference data."""


def default_catalog_path() -> Path:
    return Path(str(resources.files("kapsupp") / "data" / "catalog.json"))


@dataclass(frozen=True)
class Expected:
    total: int | None
    eliminated: int | None
    surviving: int | None

    def to_json(self) -> dict:
        return {"total": self.total, "eliminated": self.eliminated, "surviving": self.surviving}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    vertices: int
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    expected: Expected
    elimination_mode: str
    provisional: bool
    row: int | None = None
    census_removed: dict = field(default_factory=dict)  # n -> graphs removed by this row

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.vertices, self.edges)

    def config(self) -> CycleConfig:
        return CycleConfig(self.vertices, self.edges, self.cycles, self.name)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "kind": self.kind,
            "vertices": self.vertices,
            "edges": [list(e) for e in self.edges],
            "cycles": [list(c) for c in self.cycles],
            "expected": self.expected.to_json(),
            "elimination_mode": self.elimination_mode,
            "provisional": self.provisional,
        }
        if self.row is not None:
            out["row"] = self.row
        if self.census_removed:
            out["census_removed"] = {str(n): c for n, c in sorted(self.census_removed.items())}
        return out


@dataclass(frozen=True)
class Recognizer:
    name: str
    family: str

    def to_json(self) -> dict:
        return {"name": self.name, "kind": RECOGNIZER, "family": self.family}


@dataclass(frozen=True)
class Catalog:
    filters: tuple[CatalogEntry, ...]
    triangles: tuple[CatalogEntry, ...]
    recognizers: tuple[Recognizer, ...]
    version: str
    path: str = ""

    @property
    def entries(self) -> tuple[CatalogEntry, ...]:
        """Triangle entries first, then the filter rows in order."""
        return self.triangles + self.filters

    def entry(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def patterns(self) -> list[tuple[str, SimpleGraph]]:
        return [(e.name, e.graph()) for e in self.filters]

    def to_json(self) -> dict:
        return {
            "format": 1,
            "filters": [e.to_json() for e in self.filters],
            "triangles": [e.to_json() for e in self.triangles],
            "recognizers": [r.to_json() for r in self.recognizers],
        }


def version_hash(doc: dict) -> str:
    """sha256 of the canonical serialisation (sorted keys, no whitespace)."""
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def dumps(cat: Catalog) -> str:
    """The file form of a catalog; loading it back gives the same version hash."""
    return json.dumps(cat.to_json(), indent=1, sort_keys=True) + "\n"


# -- loading ---------------------------------------------------------------------------


def _need(d: dict, key: str, types, where: str):
    if key not in d:
        raise CatalogError(f"{where}: missing field {key!r}")
    v = d[key]
    if not isinstance(v, types) or (isinstance(v, bool) and types is not bool):
        raise CatalogError(f"{where}: field {key!r} has the wrong type")
    return v


def _count(v, where: str) -> int | None:
    if v is None:
        return None
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise CatalogError(f"{where}: counts must be non-negative integers or null")
    return v


def _parse_entry(d: dict, kind: str) -> CatalogEntry:
    if not isinstance(d, dict):
        raise CatalogError("entries must be objects")
    name = _need(d, "name", str, "entry")
    where = f"entry {name!r}"
    if d.get("kind") != kind:
        raise CatalogError(f"{where}: kind must be {kind!r}")
    n = _need(d, "vertices", int, where)
    edges = _need(d, "edges", list, where)
    cycles = _need(d, "cycles", list, where)
    exp = _need(d, "expected", dict, where)
    mode = _need(d, "elimination_mode", str, where)
    prov = _need(d, "provisional", bool, where)
    if mode not in ELIMINATION_MODES:
        raise CatalogError(f"{where}: unknown elimination mode {mode!r}")
    if set(exp) != {"total", "eliminated", "surviving"}:
        raise CatalogError(f"{where}: expected needs exactly total, eliminated, surviving")
    expected = Expected(*(_count(exp[k], where) for k in ("total", "eliminated", "surviving")))
    try:
        es = tuple((int(u), int(v)) for u, v in edges)
        cs = tuple(tuple(int(x) for x in c) for c in cycles)
    except (TypeError, ValueError):
        raise CatalogError(f"{where}: edges must be pairs and cycles lists of vertices") from None
    row = None
    removed = {}
    if kind == FILTER:
        row = _need(d, "row", int, where)
        raw = _need(d, "census_removed", dict, where)
        removed = {int(k): _count(v, where) for k, v in raw.items()}
    return CatalogEntry(name, kind, n, es, cs, expected, mode, prov, row, removed)


def _check_entry(e: CatalogEntry) -> None:
    where = f"entry {e.name!r}"
    try:
        g = SimpleGraph(e.vertices, e.edges)
        e.config()
    except ValueError as exc:
        raise CatalogError(f"{where}: {exc}") from None
    if e.vertices and not nx.is_connected(g.to_networkx()):
        raise CatalogError(f"{where}: graph is not connected")
    if max(g.degrees(), default=0) > 3:
        raise CatalogError(f"{where}: degree above 3")
    triangles = sum(nx.triangles(g.to_networkx()).values())
    if e.kind != TRIANGLE and triangles:
        raise CatalogError(f"{where}: contains a triangle")
    if e.kind == TRIANGLE and not triangles:
        raise CatalogError(f"{where}: triangle entry without a triangle")
    if e.elimination_mode == VACUOUS and e.expected.total not in (0, None):
        raise CatalogError(f"{where}: a vacuous entry has no cases")


def _cross_check(e: CatalogEntry) -> None:
    """Embedded counts must agree with the published reference data."""
    where = f"entry {e.name!r}"
    ref = reference.CASE_COUNTS.get(e.name)
    if ref is not None:
        got = (e.expected.total, e.expected.eliminated, e.expected.surviving, e.elimination_mode)
        if got != ref:
            raise CatalogError(f"{where}: expected counts {got} differ from published {ref}")
    elif not e.provisional:
        raise CatalogError(f"{where}: no published counts, so the entry must be provisional")
    if e.kind == FILTER:
        name, counts = reference.FILTER_COUNTS[e.row - 1]
        if name != e.name:
            raise CatalogError(f"{where}: row {e.row} is {name!r} in the reference table")
        published = dict(zip(reference.CENSUS_SIZES, counts))
        if e.census_removed != published:
            raise CatalogError(f"{where}: census removal counts differ from the reference table")


def parse_catalog(doc: dict, path: str = "") -> Catalog:
    if not isinstance(doc, dict) or doc.get("format") != 1:
        raise CatalogError("not a catalog document (format 1)")
    for key in ("filters", "triangles", "recognizers"):
        if not isinstance(doc.get(key), list):
            raise CatalogError(f"missing list {key!r}")
    filters = tuple(_parse_entry(d, FILTER) for d in doc["filters"])
    triangles = tuple(_parse_entry(d, TRIANGLE) for d in doc["triangles"])
    recognizers = []
    for d in doc["recognizers"]:
        if not isinstance(d, dict) or d.get("kind") != RECOGNIZER or FAMILIES.get(d.get("name")) != d.get("family"):
            raise CatalogError(f"bad recognizer {d!r}")
        recognizers.append(Recognizer(d["name"], d["family"]))
    names = [e.name for e in filters + triangles]
    if len(set(names)) != len(names):
        raise CatalogError("duplicate entry names")
    if [e.row for e in filters] != list(range(1, len(filters) + 1)):
        raise CatalogError("filter rows must be numbered 1, 2, ... in order")
    if len(filters) != len(reference.FILTER_COUNTS):
        raise CatalogError(f"expected {len(reference.FILTER_COUNTS)} filter rows, found {len(filters)}")
    if sorted(r.name for r in recognizers) != sorted(FAMILIES):
        raise CatalogError("catalog must list both ladder recognizers")
    if not any(e.kind == TRIANGLE and e.vertices == 3 for e in triangles):
        raise CatalogError("catalog must contain the triangle")
    for e in filters + triangles:
        _check_entry(e)
        _cross_check(e)
    return Catalog(filters, triangles, tuple(recognizers), version_hash(doc), path)


def load_catalog(path=None) -> Catalog:
    path = Path(path) if path is not None else default_catalog_path()
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: not valid JSON ({exc})") from None
    return parse_catalog(doc, str(path))


# -- validation against the cycle enumeration ------------------------------------------


@dataclass
class EntryValidation:
    name: str
    provisional: bool
    mode: str
    expected: Expected
    total: int
    eliminated: int | None = None  # None when classification was skipped
    surviving: int | None = None
    eliminated_by: dict = field(default_factory=dict)
    passed: bool | None = None  # None when nothing published can be compared
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "provisional": self.provisional,
            "elimination_mode": self.mode,
            "expected": self.expected.to_json(),
            "computed": {"total": self.total, "eliminated": self.eliminated, "surviving": self.surviving},
            "eliminated_by": dict(sorted(self.eliminated_by.items())),
            "passed": self.passed,
            "note": self.note,
        }


def validate_entry(e: CatalogEntry, classifier_config: ClassifierConfig = DEFAULT_CONFIG,
                   classify_all: bool = False) -> EntryValidation:
    """Compare the enumerated case counts of ``e`` with its published counts.

    Totals are compared first; when a published total is missed the entry has
    already failed, and the costly classification is skipped unless
    ``classify_all`` is set.
    """
    cfg = e.config()
    _, total = count_classes(cfg)
    exp = e.expected
    v = EntryValidation(e.name, e.provisional, e.elimination_mode, exp, total)
    total_ok = exp.total is None or exp.total == total
    if total_ok or classify_all:
        rep = analyze_configuration(cfg, classifier_config)
        v.eliminated = rep.eliminated_total
        v.surviving = len(rep.surviving)
        v.eliminated_by = dict(rep.eliminated)
    checks = []
    if exp.total is not None:
        checks.append(("total", exp.total, total))
    if e.elimination_mode in (FINITE_AND_SOLVABLE, VACUOUS) and v.eliminated is not None:
        if exp.eliminated is not None:
            checks.append(("eliminated", exp.eliminated, v.eliminated))
        if exp.surviving is not None:
            checks.append(("surviving", exp.surviving, v.surviving))
    if not checks:
        v.note = "no published counts to compare"
        return v
    bad = [f"{k} {got} != {want}" for k, want, got in checks if want != got]
    v.passed = not bad
    v.note = "; ".join(bad)
    if not total_ok and not classify_all:
        v.note += "; classification skipped"
    return v


def validate_catalog(cat: Catalog, classifier_config: ClassifierConfig = DEFAULT_CONFIG,
                     names: Sequence[str] | None = None, jobs: int = 1,
                     classify_all: bool = False) -> list[EntryValidation]:
    entries = [e for e in cat.entries if names is None or e.name in names]
    if jobs > 1 and len(entries) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(validate_entry, entries, [classifier_config] * len(entries),
                               [classify_all] * len(entries)))
    return [validate_entry(e, classifier_config, classify_all) for e in entries]
