"""Connected cubic triangle-free graphs: generation, subgraph tests and the filter pipeline.

Generation grows graphs two vertices at a time.  An *insertion* subdivides
two distinct edges of a cubic graph and joins the two new vertices.  Every
connected cubic graph is reached from K4, the rings of diamonds and disjoint
unions of two smaller graphs (an insertion across the two components joins
them), except some graphs with three or more bridges; those carry too many
triangles to have triangle-free children, so the triangle-free census is
not affected.  Duplicates are removed with canonical certificates.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
import numba
from numba import njit, prange

from . import canon

if "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is often too old; avoid probing it
    numba.config.THREADING_LAYER = "workqueue"

MIN_N, MAX_N = 4, 20


@dataclass(frozen=True)
class SimpleGraph:
    """A simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        es = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        if len(set(es)) != len(es) or any(u == v for u, v in es):
            raise ValueError("not a simple graph")
        if es and max(v for _, v in es) >= self.n:
            raise ValueError("vertex out of range")
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "SimpleGraph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), tuple((index[u], index[v]) for u, v in g.edges()))

    @classmethod
    def from_certificate(cls, cert: bytes) -> "SimpleGraph":
        return cls(int.from_bytes(cert[:2], "little"), canon.edges_from_certificate(cert))

    @classmethod
    def from_graph6(cls, line: bytes | str) -> "SimpleGraph":
        if isinstance(line, str):
            line = line.encode()
        return cls.from_networkx(nx.from_graph6_bytes(line.strip()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def graph6(self) -> bytes:
        return nx.to_graph6_bytes(self.to_networkx(), header=False).strip()

    def adjacency_masks(self) -> np.ndarray:
        m = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return m

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def certificate(self) -> bytes:
        return canon.certificate(self.n, self.edges)


# -- generation ------------------------------------------------------------------


def _ring_of_diamonds(k: int) -> tuple:
    es = []
    for i in range(k):
        s, u, v, t = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        es += [(s, u), (s, v), (u, v), (u, t), (v, t), (t, (4 * i + 4) % (4 * k))]
    return tuple(sorted((min(a, b), max(a, b)) for a, b in es))


def _k4() -> tuple:
    return ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _children(level: dict, n: int, triangle_free: bool) -> set[bytes]:
    out: set[bytes] = set()
    for cert in level[n - 2]:
        out.update(canon.insertion_children(n - 2, canon.edges_from_certificate(cert), triangle_free))
    # disjoint unions of two smaller connected graphs, joined by the insertion
    for n1 in range(4, n - 2, 2):
        n2 = n - 2 - n1
        if n2 < n1 or n2 < 4:
            break
        first = sorted(level[n1])
        second = sorted(level[n2])
        for i, c1 in enumerate(first):
            e1 = canon.edges_from_certificate(c1)
            for j, c2 in enumerate(second):
                if n1 == n2 and j < i:
                    continue
                e2 = canon.edges_from_certificate(c2)
                es = e1 + tuple((a + n1, b + n1) for a, b in e2)
                out.update(canon.insertion_children(n - 2, es, triangle_free, split=n1))
    return out


def _cubic_levels(n_max: int) -> dict:
    """Certificates of connected cubic graphs (with triangles allowed) for 4 <= n <= n_max."""
    level = {4: {canon.certificate(4, _k4())}}
    for n in range(6, n_max + 1, 2):
        s = _children(level, n, False)
        if n % 4 == 0:
            s.add(canon.certificate(n, _ring_of_diamonds(n // 4)))
        level[n] = s
    return level


def _check_n(n: int):
    if n % 2 or not (MIN_N <= n <= MAX_N):
        raise ValueError(f"n must be even with {MIN_N} <= n <= {MAX_N}, got {n}")


def generate(n: int, cache_dir: str | os.PathLike | None = None) -> list[SimpleGraph]:
    """All connected cubic triangle-free graphs on ``n`` vertices, up to isomorphism.

    Output is sorted by certificate.  With ``cache_dir`` the result is read
    from / written to ``census-n<N>.g6`` there.
    """
    _check_n(n)
    if cache_dir is not None:
        path = Path(cache_dir) / f"census-n{n}.g6"
        if path.exists():
            return read_graph6(path)
    if n == 4:
        graphs: list[SimpleGraph] = []
    else:
        level = _cubic_levels(n - 2)
        certs = sorted(_children(level, n, True))
        graphs = [SimpleGraph.from_certificate(c) for c in certs]
    if cache_dir is not None:
        write_graph6(Path(cache_dir) / f"census-n{n}.g6", graphs)
    return graphs


def write_graph6(path, graphs: Iterable[SimpleGraph]):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "wb") as fh:
        for g in graphs:
            fh.write(g.graph6() + b"\n")
    os.replace(tmp, path)


def read_graph6(path) -> list[SimpleGraph]:
    with open(path, "rb") as fh:
        return [SimpleGraph.from_graph6(line) for line in fh if line.strip()]


# -- subgraph containment ----------------------------------------------------------


@njit(cache=True)
def _contains(hadj, hdeg, order, parent, prev_mask, pdeg):
    nh = hadj.shape[0]
    m = order.shape[0]
    img = np.full(m, -1, dtype=np.int64)  # image of order[i]
    nxt = np.zeros(m, dtype=np.int64)  # next host vertex to try at level i
    used = np.int64(0)
    i = 0
    while i >= 0:
        if i == m:
            return True
        if img[i] >= 0:
            used &= ~(np.int64(1) << img[i])
            img[i] = -1
        if parent[i] >= 0:
            pool = hadj[img[parent[i]]]
        else:
            pool = (np.int64(1) << nh) - 1 if nh < 63 else np.int64(-1)
        found = False
        h = nxt[i]
        while h < nh:
            bit = np.int64(1) << h
            if (pool & bit) and not (used & bit) and hdeg[h] >= pdeg[i]:
                ok = True
                mask = prev_mask[i]
                j = 0
                while mask:
                    if mask & 1:
                        if not (hadj[img[j]] & bit):
                            ok = False
                            break
                    mask >>= 1
                    j += 1
                if ok:
                    img[i] = h
                    used |= bit
                    nxt[i] = h + 1
                    found = True
                    break
            h += 1
        if found:
            i += 1
            if i < m:
                nxt[i] = 0
        else:
            nxt[i] = 0
            i -= 1
    return False


@njit(cache=True, parallel=True)
def _contains_batch(masks, degs, order, parent, prev_mask, pdeg, alive):
    out = np.zeros(masks.shape[0], dtype=np.bool_)
    for k in prange(masks.shape[0]):
        if alive[k]:
            out[k] = _contains(masks[k], degs[k], order, parent, prev_mask, pdeg)
    return out


class HostBatch:
    """Adjacency bitmasks of many hosts on the same vertex count, for batched tests."""

    def __init__(self, graphs: Sequence[SimpleGraph]):
        self.graphs = list(graphs)
        n = self.graphs[0].n if self.graphs else 0
        self.masks = np.zeros((len(self.graphs), n), dtype=np.int64)
        self.degs = np.zeros((len(self.graphs), n), dtype=np.int64)
        for k, g in enumerate(self.graphs):
            self.masks[k] = g.adjacency_masks()
            self.degs[k] = g.degrees()

    def __len__(self):
        return len(self.graphs)

    def contains(self, pattern: "Pattern", alive: np.ndarray | None = None) -> np.ndarray:
        if alive is None:
            alive = np.ones(len(self.graphs), dtype=np.bool_)
        if not self.graphs or pattern.graph.n > self.masks.shape[1]:
            return np.zeros(len(self.graphs), dtype=np.bool_)
        return _contains_batch(self.masks, self.degs, pattern.order, pattern.parent,
                               pattern.prev_mask, pattern.pdeg, alive)


@dataclass
class Pattern:
    """A pattern graph prepared for repeated containment tests."""

    graph: SimpleGraph
    order: np.ndarray = field(init=False)
    parent: np.ndarray = field(init=False)
    prev_mask: np.ndarray = field(init=False)
    pdeg: np.ndarray = field(init=False)

    def __post_init__(self):
        g = self.graph
        adj = [set() for _ in range(g.n)]
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        deg = [len(a) for a in adj]
        order: list[int] = []
        placed = set()
        while len(order) < g.n:
            # start each component at a vertex of largest degree, then grow greedily
            root = max((v for v in range(g.n) if v not in placed), key=lambda v: (deg[v], -v))
            order.append(root)
            placed.add(root)
            while True:
                frontier = [v for v in range(g.n) if v not in placed and adj[v] & placed]
                if not frontier:
                    break
                v = max(frontier, key=lambda v: (len(adj[v] & placed), deg[v], -v))
                order.append(v)
                placed.add(v)
        pos = {v: i for i, v in enumerate(order)}
        parent = []
        prev = []
        for i, v in enumerate(order):
            earlier = sorted(pos[u] for u in adj[v] if pos[u] < i)
            parent.append(earlier[0] if earlier else -1)
            prev.append(sum(1 << j for j in earlier))
        self.order = np.array(order, dtype=np.int64)
        self.parent = np.array(parent, dtype=np.int64)
        self.prev_mask = np.array(prev, dtype=np.int64)
        self.pdeg = np.array([deg[v] for v in order], dtype=np.int64)

    def found_in(self, host: SimpleGraph, masks: np.ndarray | None = None,
                 degrees: np.ndarray | None = None) -> bool:
        if self.graph.n > host.n or len(self.graph.edges) > len(host.edges):
            return False
        if masks is None:
            masks = host.adjacency_masks()
        if degrees is None:
            degrees = np.array(host.degrees(), dtype=np.int64)
        return bool(_contains(masks, degrees, self.order, self.parent, self.prev_mask, self.pdeg))


def contains_subgraph(host: SimpleGraph, pattern: SimpleGraph | Pattern) -> bool:
    """True iff some injective vertex map sends every pattern edge to a host edge."""
    if host.n > 62:
        raise ValueError("host too large")
    if not isinstance(pattern, Pattern):
        pattern = Pattern(pattern)
    return pattern.found_in(host)


# -- ladders -------------------------------------------------------------------------


def prism_graph(m: int) -> SimpleGraph:
    es = [(i, (i + 1) % m) for i in range(m)] + [(m + i, m + (i + 1) % m) for i in range(m)]
    es += [(i, m + i) for i in range(m)]
    return SimpleGraph(2 * m, tuple(es))


def moebius_graph(m: int) -> SimpleGraph:
    n = 2 * m
    es = [(i, (i + 1) % n) for i in range(n)] + [(i, i + m) for i in range(m)]
    return SimpleGraph(n, tuple(es))


def recognize_ladder(g: SimpleGraph) -> tuple[str, int] | None:
    """``("prism", m)`` or ``("moebius", m)`` when ``g`` is a ladder on 2m vertices."""
    if g.n % 2 or g.n < 6 or any(d != 3 for d in g.degrees()):
        return None
    m = g.n // 2
    cert = g.certificate()
    if cert == prism_graph(m).certificate():
        return ("prism", m)
    if cert == moebius_graph(m).certificate():
        return ("moebius", m)
    return None


# -- pipeline --------------------------------------------------------------------------


@dataclass
class CensusRecord:
    graph: SimpleGraph
    removed_by: str  # catalog entry name, "L_n", "M_n" or "survivor"


@dataclass
class PipelineReport:
    n: int
    rows: list[str]
    removed: dict  # row name -> count
    ladder_prism: int
    ladder_moebius: int
    survivors: list[SimpleGraph]
    records: list[CensusRecord]

    @property
    def total(self) -> int:
        return len(self.records)

    def conserved(self) -> bool:
        return (sum(self.removed.values()) + self.ladder_prism + self.ladder_moebius
                + len(self.survivors)) == self.total


def run_pipeline(n: int, patterns: Sequence[tuple[str, SimpleGraph]],
                 graphs: Sequence[SimpleGraph] | None = None,
                 cache_dir=None, jobs: int = 1) -> PipelineReport:
    """Remove each graph by the first pattern it contains, then recognise ladders.

    ``jobs`` sets the number of threads used for the containment tests.
    """
    if graphs is None:
        graphs = generate(n, cache_dir)
    if jobs > 1:
        numba.set_num_threads(min(jobs, numba.config.NUMBA_NUM_THREADS))
    batch = HostBatch(graphs)
    alive = np.ones(len(batch), dtype=np.bool_)
    verdicts: list = [None] * len(batch)
    removed = {}
    for name, p in patterns:
        hit = batch.contains(Pattern(p), alive)
        for k in np.flatnonzero(hit):
            verdicts[k] = name
        removed[name] = int(hit.sum())
        alive &= ~hit
    records = []
    survivors = []
    lp = lm = 0
    for g, name in zip(graphs, verdicts):
        if name is None:
            lad = recognize_ladder(g)
            if lad and lad[0] == "prism":
                name = "L_n"
                lp += 1
            elif lad:
                name = "M_n"
                lm += 1
            else:
                name = "survivor"
                survivors.append(g)
        records.append(CensusRecord(g, name))
    return PipelineReport(n, [name for name, _ in patterns], removed, lp, lm, survivors, records)


def table_csv(reports: Sequence[PipelineReport]) -> str:
    """Table with one row per filter and one column per n."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "name"] + [f"n={r.n}" for r in reports])
    w.writerow(["", "Total"] + [r.total for r in reports])
    names = reports[0].rows if reports else []
    for i, name in enumerate(names, 1):
        w.writerow([i, name] + [r.removed.get(name, 0) for r in reports])
    w.writerow(["", "Isomorphic to L_n"] + [r.ladder_prism for r in reports])
    w.writerow(["", "Isomorphic to M_n"] + [r.ladder_moebius for r in reports])
    w.writerow(["", "Remains"] + [len(r.survivors) for r in reports])
    return buf.getvalue()
