import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from kapsupp import canon
from kapsupp.census import (
    HostBatch, Pattern, SimpleGraph, contains_subgraph, generate, moebius_graph, prism_graph,
    read_graph6, recognize_ladder, run_pipeline, table_csv, write_graph6,
)


def brute_force_census(n, triangle_free=True):
    """Connected cubic (triangle-free) graphs on n vertices by exhaustive edge choice."""
    found = []
    pairs = list(itertools.combinations(range(n), 2))

    def rec(i, deg, edges):
        if len(edges) == 3 * n // 2:
            g = nx.Graph(edges)
            if nx.is_connected(g) and not (triangle_free and any(nx.triangles(g).values())):
                if not any(nx.is_isomorphic(g, h) for h in found):
                    found.append(g)
            return
        # the lowest vertex still short of degree 3 must take its next edge now
        v = min((u for u in range(n) if deg[u] < 3), default=None)
        if v is None:
            return
        for j in range(i, len(pairs)):
            a, b = pairs[j]
            if a > v:
                break
            if a != v and b != v:
                continue
            if deg[a] < 3 and deg[b] < 3:
                deg[a] += 1
                deg[b] += 1
                rec(j + 1, deg, edges + [(a, b)])
                deg[a] -= 1
                deg[b] -= 1

    if triangle_free and n >= 6:
        # relabel so that N(0) = {1, 2, 3} and N(1) = {0, 4, 5}
        start = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
        deg = [3, 3, 1, 1, 1, 1] + [0] * (n - 6)
        rec(pairs.index((1, 5)) + 1, deg, start)
    else:
        rec(0, [0] * n, [])
    return found


@pytest.mark.parametrize("n,count", [(4, 0), (6, 1), (8, 2), (10, 6)])
def test_generate_matches_brute_force(n, count):
    ours = [g.to_networkx() for g in generate(n)]
    brute = brute_force_census(n)
    assert len(ours) == len(brute) == count
    for g in brute:
        assert sum(nx.is_isomorphic(g, h) for h in ours) == 1


@pytest.mark.parametrize("n", [10, 12])
def test_census_graphs_valid_and_distinct(n):
    gs = generate(n)
    certs = {g.certificate() for g in gs}
    assert len(certs) == len(gs)
    for g in gs:
        h = g.to_networkx()
        assert all(d == 3 for _, d in h.degree())
        assert nx.is_connected(h) and not any(nx.triangles(h).values())
    for a, b in itertools.combinations(gs, 2):
        assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_generate_cache_round_trip(tmp_path):
    first = generate(12, tmp_path)
    assert (tmp_path / "census-n12.g6").exists()
    again = generate(12, tmp_path)
    assert [g.edges for g in first] == [g.edges for g in again]


def relabel(g: SimpleGraph, perm):
    return SimpleGraph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_certificate_permutation_invariant(seed):
    rng = random.Random(seed)
    n = rng.choice([6, 8, 10, 12])
    g = rng.choice(generate(n))
    perm = list(range(n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert canon.certificate(n, h.edges) == canon.certificate(n, g.edges)
    assert nx.is_isomorphic(SimpleGraph.from_certificate(h.certificate()).to_networkx(), g.to_networkx())


@pytest.mark.parametrize("n,count", [(4, 1), (6, 2), (8, 5)])
def test_certificates_separate_cubic_graphs(n, count):
    # connected cubic graphs, triangles allowed
    gs = brute_force_census(n, triangle_free=False)
    assert len(gs) == count
    certs = [canon.certificate(n, tuple(g.edges())) for g in gs]
    assert len(set(certs)) == count


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_graph6_round_trip_against_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 40)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.2]
    g = SimpleGraph(n, tuple(edges))
    ref = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
    assert g.graph6() == ref
    back = SimpleGraph.from_graph6(ref)
    assert back.n == n and back.edges == g.edges


def test_graph6_file_round_trip(tmp_path):
    gs = generate(14)
    write_graph6(tmp_path / "x.g6", gs)
    assert [g.edges for g in read_graph6(tmp_path / "x.g6")] == [g.edges for g in gs]


def exhaustive_contains(host: SimpleGraph, pat: SimpleGraph) -> bool:
    hedges = set(host.edges) | {(v, u) for u, v in host.edges}
    for img in itertools.permutations(range(host.n), pat.n):
        if all((img[u], img[v]) in hedges for u, v in pat.edges):
            return True
    return False


SMALL_PATTERNS = {
    "C4": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "C5": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
    "C6": [(i, (i + 1) % 6) for i in range(6)],
    "K23": [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
    "C4-C4": [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)],
    "P5": [(0, 1), (1, 2), (2, 3), (3, 4)],
}


def small_hosts():
    hosts = [g for n in (6, 8, 10) for g in generate(n)]
    rng = random.Random(7)
    # random subgraphs of maximum degree 3
    for _ in range(30):
        g = rng.choice(hosts[:9])
        keep = tuple(e for e in g.edges if rng.random() < 0.8)
        hosts.append(SimpleGraph(g.n, keep))
    return hosts


@pytest.mark.parametrize("pname", sorted(SMALL_PATTERNS))
def test_subgraph_iso_matches_exhaustive(pname):
    edges = SMALL_PATTERNS[pname]
    pat = SimpleGraph(max(max(e) for e in edges) + 1, tuple(edges))
    for host in small_hosts():
        want = exhaustive_contains(host, pat)
        assert contains_subgraph(host, pat) == want
        gm = GraphMatcher(host.to_networkx(), pat.to_networkx())
        assert gm.subgraph_is_monomorphic() == want


def test_batch_matches_single(catalog):
    hosts = generate(14)
    batch = HostBatch(hosts)
    for name, p in catalog.patterns()[:10]:
        hits = batch.contains(Pattern(p))
        assert list(hits) == [contains_subgraph(h, p) for h in hosts], name


@pytest.mark.parametrize("m", range(3, 11))
def test_ladders_against_networkx(m):
    prism = prism_graph(m)
    moebius = moebius_graph(m)
    assert nx.is_isomorphic(prism.to_networkx(), nx.circular_ladder_graph(m))
    assert nx.is_isomorphic(moebius.to_networkx(), nx.circulant_graph(2 * m, [1, m]))
    assert recognize_ladder(prism) == ("prism", m)
    assert recognize_ladder(moebius) == ("moebius", m)


def test_recognize_ladder_rejects_others():
    # the Petersen graph is no ladder; on 12 vertices only L_6 and M_6 are
    assert recognize_ladder(SimpleGraph.from_networkx(nx.petersen_graph())) is None
    others = [g for g in generate(12) if recognize_ladder(g) is None]
    assert len(others) == len(generate(12)) - 2


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
def test_pipeline_conservation(catalog, n):
    rep = run_pipeline(n, catalog.patterns())
    assert rep.conserved()
    assert rep.total == len(generate(n))
    assert sum(r.removed_by != "survivor" for r in rep.records) == rep.total - len(rep.survivors)


@settings(max_examples=10, deadline=None)
@given(st.randoms(use_true_random=False))
def test_pipeline_conservation_any_order(catalog, rnd):
    pats = catalog.patterns()
    rnd.shuffle(pats)
    pats = pats[: rnd.randint(0, len(pats))]
    rep = run_pipeline(12, pats)
    assert rep.conserved()
    # first-match removal: each graph contains the pattern that removed it
    index = dict(pats)
    for rec in rep.records:
        if rec.removed_by in index:
            assert contains_subgraph(rec.graph, index[rec.removed_by])


def test_table_csv_layout(catalog):
    reps = [run_pipeline(n, catalog.patterns()) for n in (6, 8)]
    lines = table_csv(reps).splitlines()
    assert lines[0] == "row,name,n=6,n=8"
    assert lines[1] == ",Total,1,2"
    assert lines[-1] == ",Remains,0,0"
    assert len(lines) == 2 + len(catalog.patterns()) + 3
