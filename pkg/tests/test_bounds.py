import networkx as nx
import pytest
from hypothesis import given, strategies as st

from kapsupp import bounds
from kapsupp.bounds import (
    CENSUS, DYKEMA, DYKEMA_AS_APPLIED, DYKEMA_LITERAL, HAMIDOUNE, KEMPERMAN, SEED_H,
    TARGET_DEGREES, all_trails, dykema_applies, product_bound, search_unit_order8,
    seed_is_consistent, unit_infeasible, zero_divisor_infeasible,
)


@given(st.sets(st.integers(-30, 30), min_size=1, max_size=8),
       st.sets(st.integers(-30, 30), min_size=1, max_size=8))
def test_kemperman_bound_holds_in_integers(b, c):
    # Z is torsion-free, so |B + C| >= |B| + |C| - 1
    sums = {x + y for x in b for y in c}
    assert len(sums) >= product_bound(len(b), len(c), KEMPERMAN).bound


def test_hamidoune_preconditions():
    assert product_bound(3, 4, HAMIDOUNE).bound == 8
    with pytest.raises(ValueError):
        product_bound(3, 3, HAMIDOUNE)
    with pytest.raises(ValueError):
        product_bound(3, 4, HAMIDOUNE, nonabelian=False)


def test_dykema_readings():
    assert [n for n in range(3, 20) if dykema_applies(n)] == [3, 5, 7, 9, 11, 13, 15, 17, 19]
    assert [n for n in range(3, 20) if dykema_applies(n, DYKEMA_LITERAL)] == [13, 15, 17, 19]


def test_all_sizes_infeasible():
    trails = all_trails()
    assert [(t.mode, t.n) for t in trails] == (
        [("zero_divisor", n) for n in range(3, 10)] + [("unit", n) for n in range(3, 9)])
    assert all(t.verdict == "infeasible" for t in trails)
    assert all(t.steps for t in trails)


def test_disabling_census_opens_size_eight():
    opened = [(t.mode, t.n) for t in all_trails(disabled=[CENSUS]) if t.verdict != "infeasible"]
    assert opened == [("zero_divisor", 8), ("unit", 8)]
    for t in all_trails(disabled=[CENSUS]):
        if t.verdict != "infeasible":
            assert t.blocked_by == [CENSUS]


def test_literal_reading_needs_more():
    # reading the odd-size oracle literally is the same as dropping it for n < 10
    want = [("zero_divisor", 9), ("unit", 3), ("unit", 7)]
    for trails in (all_trails(reading=DYKEMA_LITERAL), all_trails(disabled=[DYKEMA])):
        opened = [t for t in trails if t.verdict != "infeasible"]
        assert [(t.mode, t.n) for t in opened] == want
        assert all(t.blocked_by == [DYKEMA] for t in opened)


def test_size_range_checked():
    with pytest.raises(ValueError):
        zero_divisor_infeasible(10)
    with pytest.raises(ValueError):
        unit_infeasible(9)


def has_k23(g):
    return any(len(set(g[u]) & set(g[v])) >= 3 for u in g for v in g if u < v)


def test_unit_order8_search():
    assert seed_is_consistent()
    res = search_unit_order8()
    assert res.completions == []
    control = search_unit_order8(ban_k23=False)
    assert control.completions
    for edges in control.completions:
        g = nx.Graph(edges)
        assert [g.degree(v) for v in range(8)] == list(TARGET_DEGREES)
        assert all(g.has_edge(u, v) for u, v in SEED_H)
        assert sum(nx.triangles(g).values()) == 3
        assert has_k23(g)
    total = sum(c["completions"] for c in control.log.values())
    assert total == len(control.completions)


def test_trail_json_and_text():
    t = unit_infeasible(8)
    doc = t.to_json()
    assert doc["verdict"] == "infeasible" and doc["n"] == 8
    assert t.text().startswith("unit n=8: infeasible")
    assert bounds.trails_json([t]).startswith("[")
