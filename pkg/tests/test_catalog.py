import copy
import json
import re

import networkx as nx
import pytest

from kapsupp import reference
from kapsupp.catalog import (
    CatalogError, default_catalog_path, dumps, load_catalog, parse_catalog, validate_entry,
    version_hash,
)
from kapsupp.census import contains_subgraph


@pytest.fixture
def doc():
    return json.loads(default_catalog_path().read_text())


def test_bundled_catalog_shape(catalog):
    assert len(catalog.filters) == len(reference.FILTER_COUNTS) == 44
    assert [e.name for e in catalog.filters] == [name for name, _ in reference.FILTER_COUNTS]
    assert [e.name for e in catalog.triangles] == ["C3", "C3-C3"]
    assert sorted(r.family for r in catalog.recognizers) == ["moebius", "prism"]
    assert [e.name for e in catalog.filters if e.provisional] == ["C4-C6(--C7--)(C7-2)"]


def test_dump_is_byte_identical(catalog):
    assert dumps(catalog) == default_catalog_path().read_text()
    again = parse_catalog(json.loads(dumps(catalog)))
    assert again.version == catalog.version == version_hash(catalog.to_json())


def test_version_ignores_layout(doc):
    spaced = json.loads(json.dumps(doc, indent=4))
    assert version_hash(spaced) == version_hash(doc)
    doc["filters"][0]["census_removed"]["16"] += 1
    assert version_hash(doc) != version_hash(spaced)


def test_entries_are_unions_of_their_cycles(catalog):
    for e in catalog.entries:
        g = e.graph().to_networkx()
        cover = set()
        for c in e.cycles:
            for u, v in zip(c, c[1:] + c[:1]):
                assert g.has_edge(u, v), e.name
                cover.add(frozenset((u, v)))
        assert cover == {frozenset(x) for x in g.edges()}, e.name
        assert nx.is_connected(g)
        if e.name != "K_{2,3}":
            # the cycle lengths are the ones named
            assert sorted(len(c) for c in e.cycles) == sorted(int(x) for x in re.findall(r"C(\d)", e.name))


def test_k23_entry(catalog):
    e = catalog.entry("K_{2,3}")
    g = e.graph().to_networkx()
    assert nx.is_isomorphic(g, nx.complete_bipartite_graph(2, 3))


def test_filters_are_not_redundant(catalog):
    # no filter graph contains an earlier one, except where a row is kept for the table
    pats = catalog.patterns()
    for i, (name, p) in enumerate(pats):
        earlier = [n for n, q in pats[:i] if q.n <= p.n and contains_subgraph(p, q)]
        row_counts = dict(reference.FILTER_COUNTS)[name]
        if earlier:
            assert not any(row_counts), (name, earlier)


@pytest.mark.parametrize("mutate,message", [
    (lambda d: d["filters"][1]["expected"].update(total=122), "differ from published"),
    (lambda d: d["filters"][1]["census_removed"].update({"16": 3}), "census removal counts"),
    (lambda d: d["triangles"][1].update(provisional=False), "must be provisional"),
    (lambda d: d["filters"][0]["edges"].append(d["filters"][0]["edges"][0]), "not a simple graph"),
    (lambda d: d["filters"][0]["edges"].append([0, 1]), "cover the edge set"),
    (lambda d: d["filters"][2].update(row=7), "numbered"),
    (lambda d: d["filters"].pop(), "filter rows"),
    (lambda d: d["filters"][0].update(elimination_mode="magic"), "unknown elimination mode"),
    (lambda d: d["filters"][0]["expected"].update(total=-1), "non-negative"),
    (lambda d: d.update(format=2), "format 1"),
    (lambda d: d["recognizers"].pop(), "recognizers"),
])
def test_malformed_catalog_rejected(doc, mutate, message):
    bad = copy.deepcopy(doc)
    mutate(bad)
    with pytest.raises(CatalogError, match=message):
        parse_catalog(bad)


def test_load_rejects_bad_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{not json")
    with pytest.raises(CatalogError):
        load_catalog(p)


def test_validate_entry_outcomes(catalog):
    tri = validate_entry(catalog.entry("C3"))
    assert (tri.total, tri.eliminated, tri.surviving, tri.passed) == (13, 13, 0, True)
    k23 = validate_entry(catalog.entry("K_{2,3}"))
    assert k23.passed is True and k23.surviving == 0
    diamond = validate_entry(catalog.entry("C3-C3"))
    assert diamond.passed is None and diamond.surviving == 0
    miss = validate_entry(catalog.entry("C4-C5(-C4-)"))
    assert miss.passed is False and miss.total == 66
    assert "classification skipped" in miss.note
    full = validate_entry(catalog.entry("C4-C5(-C4-)"), classify_all=True)
    assert full.eliminated is not None
    assert full.eliminated + full.surviving == full.total
