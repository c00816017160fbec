"""Labellings of cycle configurations by supp(alpha) = {1, h2, h3}.

A configuration is a small graph together with a list of directed cycles.
Every edge {g, g'} of a zero-divisor graph comes from a coincidence
h g = h' g' with h != h'; the pair (h at g, h' at g') is the edge's *port
labelling*.  Walking once around a cycle g_1 ... g_k with port labels
(a_i at g_i, b_i at g_{i+1}) gives the relation

    r = (a_1^-1 b_1)(a_2^-1 b_2) ... (a_k^-1 b_k) = 1.

Labels are encoded as ints: 0 -> 1, 1 -> h2, 2 -> h3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from numba import njit

from .fp import ClassifierConfig, DEFAULT_CONFIG, Presentation, classify
from .words import IDENTITY, Word, canonical_relator, concat, cyclic_reduce

LABEL_NAMES = ("1", "h2", "h3")
_LABEL_WORD = (IDENTITY, Word((2,)), Word((3,)))
# quotient a^-1 b for labels a, b
_QUOT = [[concat(Word((-c for c in reversed(_LABEL_WORD[a].codes))), _LABEL_WORD[b])
          for b in range(3)] for a in range(3)]

ZERO_DIVISOR_F2 = "zero_divisor_F2"
GENERAL_FIELD = "general_field"


@dataclass(frozen=True)
class CycleConfig:
    """A graph with designated directed cycles covering its edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        es = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad edge {(u, v)}")
            e = (min(u, v), max(u, v))
            if e in es:
                raise ValueError(f"repeated edge {e}")
            es.add(e)
        covered = set()
        for c in self.cycles:
            if len(set(c)) != len(c) or len(c) < 3:
                raise ValueError(f"bad cycle {c}")
            for u, v in zip(c, c[1:] + c[:1]):
                e = (min(u, v), max(u, v))
                if e not in es:
                    raise ValueError(f"cycle {c} uses non-edge {e}")
                covered.add(e)
        if covered != es:
            raise ValueError("cycles do not cover the edge set")
        deg = [0] * self.n
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        if max(deg, default=0) > 3:
            raise ValueError("vertex of degree > 3")
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[(u, v)] = (i, 0)
            idx[(v, u)] = (i, 1)
        object.__setattr__(self, "_index", idx)

    @classmethod
    def cycle(cls, k: int) -> "CycleConfig":
        return cls(k, tuple((i, (i + 1) % k) for i in range(k)), (tuple(range(k)),), f"C{k}")

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], name: str = "") -> "CycleConfig":
        verts = sorted({v for c in cycles for v in c})
        index = {v: i for i, v in enumerate(verts)}
        cyc = tuple(tuple(index[v] for v in c) for c in cycles)
        es = []
        seen = set()
        for c in cyc:
            for u, v in zip(c, c[1:] + c[:1]):
                e = (min(u, v), max(u, v))
                if e not in seen:
                    seen.add(e)
                    es.append(e)
        return cls(len(verts), tuple(sorted(es)), cyc, name)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def edge_index(self) -> dict:
        """Map a directed edge (u, v) to (edge number, 0 if stored as (u, v) else 1)."""
        return self._index

    def automorphisms(self) -> list[tuple[int, ...]]:
        """Graph automorphisms that permute the set of designated cycles."""
        g = self.graph()
        keys = {_cycle_key(c) for c in self.cycles}
        out = []
        for m in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter():
            perm = tuple(m[i] for i in range(self.n))
            if all(_cycle_key([perm[v] for v in c]) in keys for c in self.cycles):
                out.append(perm)
        out.sort()
        return out


def _cycle_key(c) -> frozenset:
    c = list(c)
    return frozenset((min(u, v), max(u, v)) for u, v in zip(c, c[1:] + c[:1]))


# A labelling is a tuple over edges of (label at edges[i][0], label at edges[i][1]).
Labelling = tuple


def cycle_relation(cfg: CycleConfig, lab: Labelling, cycle: Sequence[int]) -> Word:
    idx = cfg.edge_index()
    w = IDENTITY
    for u, v in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
        i, side = idx[(u, v)]
        a, b = lab[i] if side == 0 else lab[i][::-1]
        w = concat(w, _QUOT[a][b])
    return w


def relations_of(lab: Labelling, cfg: CycleConfig) -> Presentation:
    """Joint presentation of the relations of all designated cycles.

    Identity relators are dropped; a labelling whose cycles all give the
    identity is rejected with ValueError.
    """
    rels = [cyclic_reduce(cycle_relation(cfg, lab, c))[1] for c in cfg.cycles]
    rels = [r for r in rels if not r.is_identity()]
    if not rels:
        raise ValueError("every cycle relation is trivial")
    return Presentation(rels)


def tuple_of(cfg: CycleConfig, lab: Labelling, cycle: Sequence[int]) -> tuple[int, ...]:
    """The 2k-tuple (a_1, b_1, ..., a_k, b_k) read along ``cycle``."""
    idx = cfg.edge_index()
    out = []
    for u, v in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
        i, side = idx[(u, v)]
        a, b = lab[i] if side == 0 else lab[i][::-1]
        out += [a, b]
    return tuple(out)


def relation_of_tuple(t: Sequence[int]) -> Word:
    w = IDENTITY
    for a, b in zip(t[0::2], t[1::2]):
        w = concat(w, _QUOT[a][b])
    return w


def tuple_equivalents(t: Sequence[int]) -> set[tuple[int, ...]]:
    """The <= 2k tuples equivalent to ``t``: rotations by pairs and reflections."""
    k = len(t) // 2
    pairs = [(t[2 * i], t[2 * i + 1]) for i in range(k)]
    out = set()
    for s in range(k):
        rot = pairs[s:] + pairs[:s]
        out.add(tuple(x for p in rot for x in p))
        ref = [(b, a) for a, b in reversed(rot)]
        out.add(tuple(x for p in ref for x in p))
    return out


# -- enumeration ----------------------------------------------------------------


def iter_labellings(cfg: CycleConfig, mode: str = ZERO_DIVISOR_F2, accept=None):
    """Yield every valid labelling of ``cfg``.

    In ``zero_divisor_F2`` mode the labels at every vertex are pairwise
    distinct; in ``general_field`` mode only the two labels of an edge must
    differ.  ``accept(cycle_index, relation)`` may reject a partial labelling
    as soon as the cycle is fully labelled; this prunes the search.
    """
    if mode not in (ZERO_DIVISOR_F2, GENERAL_FIELD):
        raise ValueError(f"unknown mode {mode!r}")
    m = len(cfg.edges)
    # order edges so that cycles close early
    order = _edge_order(cfg)
    pos = {e: i for i, e in enumerate(order)}
    closes_at: dict[int, list[int]] = {}
    for ci, c in enumerate(cfg.cycles):
        last = max(pos[_edge_id(cfg, u, v)] for u, v in zip(c, c[1:] + c[:1]))
        closes_at.setdefault(last, []).append(ci)
    pairs = [(a, b) for a in range(3) for b in range(3) if a != b]
    lab: list = [None] * m
    used = [set() for _ in range(cfg.n)]  # labels used at each vertex

    def rec(k):
        if k == m:
            yield tuple(lab)
            return
        e = order[k]
        u, v = cfg.edges[e]
        for a, b in pairs:
            if mode == ZERO_DIVISOR_F2 and (a in used[u] or b in used[v]):
                continue
            lab[e] = (a, b)
            used[u].add(a)
            used[v].add(b)
            ok = True
            if accept is not None:
                for ci in closes_at.get(k, ()):
                    w = cycle_relation(cfg, lab, cfg.cycles[ci])
                    if not accept(ci, w):
                        ok = False
                        break
            if ok:
                yield from rec(k + 1)
            used[u].discard(a)
            used[v].discard(b)
            lab[e] = None

    yield from rec(0)


def _edge_id(cfg, u, v):
    return cfg.edge_index()[(u, v)][0]


def _edge_order(cfg: CycleConfig) -> list[int]:
    order: list[int] = []
    seen = set()
    for c in sorted(cfg.cycles, key=len):
        for u, v in zip(c, c[1:] + c[:1]):
            e = _edge_id(cfg, u, v)
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def act(cfg: CycleConfig, perm: Sequence[int], lab: Labelling) -> Labelling:
    """Transport a labelling along a vertex permutation (automorphism)."""
    idx = cfg.edge_index()
    out: list = [None] * len(lab)
    for i, (u, v) in enumerate(cfg.edges):
        j, side = idx[(perm[u], perm[v])]
        out[j] = lab[i] if side == 0 else lab[i][::-1]
    return tuple(out)


@dataclass
class TupleClass:
    representative: Labelling
    orbit: frozenset
    relations: tuple[Word, ...]

    def presentation(self) -> Presentation:
        return Presentation([r for r in self.relations if not r.is_identity()])


def enumerate_labelings(cfg: CycleConfig, mode: str = ZERO_DIVISOR_F2, accept=None,
                        autos=None) -> list[TupleClass]:
    """Valid labellings of ``cfg`` grouped into classes under its automorphisms."""
    if autos is None:
        autos = cfg.automorphisms()
    seen: set = set()
    classes = []
    for lab in iter_labellings(cfg, mode, accept):
        if lab in seen:
            continue
        orbit = frozenset(act(cfg, p, lab) for p in autos)
        seen |= orbit
        rep = min(orbit)
        rels = tuple(cyclic_reduce(cycle_relation(cfg, rep, c))[1] for c in cfg.cycles)
        classes.append(TupleClass(rep, orbit, rels))
    classes.sort(key=lambda t: t.representative)
    return classes


# -- analysis ---------------------------------------------------------------------


def _square_rows() -> dict:
    from .reference import SQUARE_RELATIONS, SQUARE_SURVIVORS, square_relation

    rows = {canonical_relator(square_relation(r)): r for r, _, _ in SQUARE_RELATIONS}
    return rows, frozenset(SQUARE_SURVIVORS)


def square_row(w: Word) -> int | None:
    """Row number of a square relation in the reference list, up to cyclic permutation and inversion."""
    rows, _ = _square_rows()
    return rows.get(canonical_relator(w))


def square_filter(cfg: CycleConfig):
    """Acceptance test enforcing what is already known about squares.

    Every 4-cycle must carry one of the nine unresolved square relations, and
    all 4-cycles of the configuration must carry the same one (two squares
    with different relations give a finite group).  Returns ``(accept,
    final)`` where ``accept`` prunes during enumeration and ``final`` checks a
    complete labelling.
    """
    rows, survivors = _square_rows()
    squares = [i for i, c in enumerate(cfg.cycles) if len(c) == 4]

    def accept(ci, w):
        if len(cfg.cycles[ci]) != 4:
            return True
        return rows.get(canonical_relator(w)) in survivors

    def final(lab):
        seen = {canonical_relator(cycle_relation(cfg, lab, cfg.cycles[i])) for i in squares}
        return len(seen) <= 1

    return accept, final


@dataclass
class ConfigurationReport:
    config: CycleConfig
    mode: str
    raw_labellings: int
    total_classes: int
    eliminated: dict  # verdict kind -> count
    surviving: list  # TupleClass
    verdicts: list = field(default_factory=list)  # (TupleClass, Classification)

    @property
    def eliminated_total(self) -> int:
        return sum(self.eliminated.values())

    def to_json(self) -> dict:
        return {
            "name": self.config.name,
            "mode": self.mode,
            "raw_labellings": self.raw_labellings,
            "total": self.total_classes,
            "eliminated": self.eliminated_total,
            "eliminated_by": dict(sorted(self.eliminated.items())),
            "surviving": len(self.surviving),
            "surviving_relations": [[str(r) for r in t.relations] for t in self.surviving],
        }


def analyze_configuration(cfg: CycleConfig, classifier_config: ClassifierConfig = DEFAULT_CONFIG,
                          mode: str = ZERO_DIVISOR_F2, squares: bool = True) -> ConfigurationReport:
    """Enumerate labelling classes of ``cfg`` and classify each joint presentation.

    With ``squares`` set, labellings violating :func:`square_filter` are
    discarded before classes are formed.  Classes whose cycle relations are
    all trivial are counted as surviving with no presentation.
    """
    accept, final = square_filter(cfg) if squares else (None, None)
    autos = cfg.automorphisms()
    seen: set = set()
    classes = []
    raw = 0
    for lab in iter_labellings(cfg, mode, accept):
        if final is not None and not final(lab):
            continue
        raw += 1
        if lab in seen:
            continue
        orbit = frozenset(act(cfg, p, lab) for p in autos)
        seen |= orbit
        rep = min(orbit)
        rels = tuple(cyclic_reduce(cycle_relation(cfg, rep, c))[1] for c in cfg.cycles)
        classes.append(TupleClass(rep, orbit, rels))
    classes.sort(key=lambda t: t.representative)
    eliminated: dict = {}
    surviving = []
    verdicts = []
    for tc in classes:
        rels = [r for r in tc.relations if not r.is_identity()]
        if not rels:
            surviving.append(tc)
            verdicts.append((tc, None))
            continue
        res = classify(Presentation(rels), classifier_config)
        verdicts.append((tc, res))
        if res.eliminated:
            k = res.verdict.kind
            eliminated[k] = eliminated.get(k, 0) + 1
        else:
            surviving.append(tc)
    return ConfigurationReport(cfg, mode, raw, len(classes), eliminated, surviving, verdicts)


# -- fast class counting ------------------------------------------------------------

_PAIRS = [(a, b) for a in range(3) for b in range(3) if a != b]
_SWAP = np.array([_PAIRS.index((b, a)) for a, b in _PAIRS], dtype=np.int64)
_PAIR_A = np.array([a for a, _ in _PAIRS], dtype=np.int64)
_PAIR_B = np.array([b for _, b in _PAIRS], dtype=np.int64)
_SQUARE_TABLE = None


def _square_table() -> np.ndarray:
    """Row number (survivors only, else -1) of every 8-tuple, indexed in base 3."""
    global _SQUARE_TABLE
    if _SQUARE_TABLE is None:
        rows, survivors = _square_rows()
        t = np.full(3 ** 8, -1, dtype=np.int64)
        for code, tup in enumerate(itertools.product(range(3), repeat=8)):
            r = rows.get(canonical_relator(relation_of_tuple(tup)))
            if r in survivors:
                t[code] = r
        _SQUARE_TABLE = t
    return _SQUARE_TABLE


@njit(cache=True)
def _count_classes(n, eu, ev, order, sq_steps, sq_close, table, use_squares, f2, img, flip):
    m = eu.shape[0]
    nsq = sq_steps.shape[0]
    nauto = img.shape[0]
    pa = np.empty(m, dtype=np.int64)
    used = np.zeros(n, dtype=np.int64)  # bitmask of labels used at each vertex
    sqrow = np.full(m + 1, -1, dtype=np.int64)  # common square row after k edges
    choice = np.full(m, -1, dtype=np.int64)
    raw = 0
    classes = 0
    k = 0
    while k >= 0:
        if k == m:
            raw += 1
            code = 0
            for e in range(m - 1, -1, -1):
                code = code * 6 + pa[e]
            least = True
            for g in range(nauto):
                c2 = 0
                for e in range(m - 1, -1, -1):
                    # edge e of the image carries the pair that edge img[g, e] had
                    src = img[g, e]
                    p = pa[src]
                    if flip[g, e]:
                        p = _SWAP_NB[p]
                    c2 = c2 * 6 + p
                if c2 < code:
                    least = False
                    break
            if least:
                classes += 1
            k -= 1
            continue
        e = order[k]
        if choice[k] >= 0:  # undo previous choice on this edge
            p = choice[k]
            used[eu[e]] &= ~(1 << _PA_NB[p])
            used[ev[e]] &= ~(1 << _PB_NB[p])
        p = choice[k] + 1
        placed = False
        while p < 6:
            a = _PA_NB[p]
            b = _PB_NB[p]
            if f2 and ((used[eu[e]] >> a) & 1 or (used[ev[e]] >> b) & 1):
                p += 1
                continue
            pa[e] = p
            row = sqrow[k]
            ok = True
            if use_squares:
                for s in range(nsq):
                    if sq_close[s] != k:
                        continue
                    code = 0
                    for j in range(4):
                        ed = sq_steps[s, j, 0]
                        pp = pa[ed]
                        if sq_steps[s, j, 1]:
                            pp = _SWAP_NB[pp]
                        code = code * 9 + _PA_NB[pp] * 3 + _PB_NB[pp]
                    r = table[code]
                    if r < 0 or (row >= 0 and r != row):
                        ok = False
                        break
                    row = r
            if ok:
                placed = True
                break
            p += 1
        if not placed:
            choice[k] = -1
            k -= 1
            continue
        choice[k] = p
        used[eu[e]] |= 1 << _PA_NB[p]
        used[ev[e]] |= 1 << _PB_NB[p]
        sqrow[k + 1] = row
        k += 1
        if k < m:
            choice[k] = -1
    return raw, classes


_SWAP_NB = _SWAP
_PA_NB = _PAIR_A
_PB_NB = _PAIR_B


def count_classes(cfg: CycleConfig, mode: str = ZERO_DIVISOR_F2, squares: bool = True) -> tuple[int, int]:
    """``(raw labellings, classes)`` as :func:`analyze_configuration` would count them.

    Compiled enumeration that never materialises the classes; a labelling is
    counted as a class when its code is least in its automorphism orbit.
    """
    if mode not in (ZERO_DIVISOR_F2, GENERAL_FIELD):
        raise ValueError(f"unknown mode {mode!r}")
    m = len(cfg.edges)
    if m > 23:
        raise ValueError("too many edges for 64-bit labelling codes")
    idx = cfg.edge_index()
    order = _edge_order(cfg)
    pos = {e: i for i, e in enumerate(order)}
    squares_ci = [ci for ci, c in enumerate(cfg.cycles) if len(c) == 4] if squares else []
    steps = np.zeros((max(len(squares_ci), 1), 4, 2), dtype=np.int64)
    close = np.full(max(len(squares_ci), 1), -1, dtype=np.int64)
    for s, ci in enumerate(squares_ci):
        c = cfg.cycles[ci]
        for j, (u, v) in enumerate(zip(c, c[1:] + c[:1])):
            steps[s, j] = idx[(u, v)]
        close[s] = max(pos[steps[s, j, 0]] for j in range(4))
    autos = cfg.automorphisms()
    img = np.zeros((len(autos), m), dtype=np.int64)
    flip = np.zeros((len(autos), m), dtype=np.int64)
    for g, perm in enumerate(autos):
        for i, (u, v) in enumerate(cfg.edges):
            j, side = idx[(perm[u], perm[v])]
            img[g, j] = i
            flip[g, j] = side
    eu = np.array([u for u, _ in cfg.edges], dtype=np.int64)
    ev = np.array([v for _, v in cfg.edges], dtype=np.int64)
    raw, classes = _count_classes(cfg.n, eu, ev, np.array(order, dtype=np.int64), steps, close,
                                  _square_table(), bool(squares_ci), mode == ZERO_DIVISOR_F2, img, flip)
    return int(raw), int(classes)


# -- squares sharing an edge and ladders -------------------------------------------

# two squares a1 a2 b2 b1 and a2 a3 b3 b2 glued along the rung a2 b2
_A1, _A2, _A3, _B1, _B2, _B3 = range(6)
SHARED_EDGE_SQUARES = CycleConfig.from_cycles(
    [(_A1, _A2, _B2, _B1), (_A2, _A3, _B3, _B2)], "two squares sharing an edge")


_SHARED_CACHE: dict = {}


def shared_edge_labellings(classifier_config: ClassifierConfig = DEFAULT_CONFIG) -> list[Labelling]:
    """Every labelling of two edge-sharing squares that no route eliminates."""
    key = (classifier_config.max_cosets, id(classifier_config.oracle), classifier_config.use_cosets)
    if key not in _SHARED_CACHE:
        _SHARED_CACHE[key] = _shared_edge_labellings(classifier_config)
    return list(_SHARED_CACHE[key])


def _shared_edge_labellings(classifier_config):
    cfg = SHARED_EDGE_SQUARES
    accept, final = square_filter(cfg)
    out = []
    for lab in iter_labellings(cfg, ZERO_DIVISOR_F2, accept):
        if not final(lab):
            continue
        if not classify(relations_of(lab, cfg), classifier_config).eliminated:
            out.append(lab)
    return out


def seed_pairs(labellings: Iterable[Labelling] | None = None) -> set[frozenset]:
    """Unordered pairs {T_C, T_C'} read from the shared edge, in the same direction.

    Both tuples start with the shared edge; each labelling contributes the
    reading in both directions of that edge.
    """
    cfg = SHARED_EDGE_SQUARES
    if labellings is None:
        labellings = shared_edge_labellings()
    out = set()
    for lab in labellings:
        # shared edge a2 -> b2, then around each square
        for c1, c2 in (((_A2, _B2, _B1, _A1), (_A2, _B2, _B3, _A3)),
                       ((_B2, _A2, _A1, _B1), (_B2, _A2, _A3, _B3))):
            out.add(frozenset((tuple_of(cfg, lab, c1), tuple_of(cfg, lab, c2))))
    return out


def _ladder(m: int) -> CycleConfig:
    # a_i = i, b_i = m + 1 + i for i = 0..m (open strip of m squares)
    a = list(range(m + 1))
    b = [m + 1 + i for i in range(m + 1)]
    return CycleConfig.from_cycles([(a[i], a[i + 1], b[i + 1], b[i]) for i in range(m)], f"strip{m}")


def propagate_strip(m: int, seed: Labelling, classifier_config: ClassifierConfig = DEFAULT_CONFIG
                    ) -> list[Labelling]:
    """Extend a two-square labelling ``seed`` along an open strip of ``m`` squares.

    Each pair of consecutive squares must itself be a surviving two-square
    labelling.  Returns all extensions (the induction says there is one).
    """
    allowed = sorted(shared_edge_labellings(classifier_config))
    cfg = _ladder(m)
    base = SHARED_EDGE_SQUARES
    # vertex names of a window starting at square i
    def window(i):
        return {_A1: i, _A2: i + 1, _A3: i + 2, _B1: m + 1 + i, _B2: m + 2 + i, _B3: m + 3 + i}

    def restrict(lab, i):
        w = window(i)
        out = [None] * len(base.edges)
        idx = cfg.edge_index()
        for j, (u, v) in enumerate(base.edges):
            k, side = idx[(w[u], w[v])]
            if lab[k] is None:
                return None
            out[j] = lab[k] if side == 0 else lab[k][::-1]
        return tuple(out)

    def extend(lab, i):
        # lab labels squares 0..i+1; add square i+2
        if i + 2 == m:
            return [tuple(lab)]
        w = window(i + 1)
        results = []
        for cand in allowed:
            new = list(lab)
            ok = True
            idx = cfg.edge_index()
            for j, (u, v) in enumerate(base.edges):
                k, side = idx[(w[u], w[v])]
                val = cand[j] if side == 0 else cand[j][::-1]
                if new[k] is None:
                    new[k] = val
                elif new[k] != val:
                    ok = False
                    break
            if ok:
                results += extend(new, i + 1)
        return results

    lab = [None] * len(cfg.edges)
    idx = cfg.edge_index()
    w = window(0)
    for j, (u, v) in enumerate(base.edges):
        k, side = idx[(w[u], w[v])]
        lab[k] = seed[j] if side == 0 else seed[j][::-1]
    if m == 2:
        return [tuple(lab)]
    out = extend(lab, 0)
    assert all(restrict(x, i) in set(allowed) for x in out for i in range(m - 1))
    return out


def _path_word(cfg: CycleConfig, lab: Labelling, path: Sequence[int]) -> Word:
    idx = cfg.edge_index()
    w = IDENTITY
    for u, v in zip(path, path[1:]):
        i, side = idx[(u, v)]
        a, b = lab[i] if side == 0 else lab[i][::-1]
        w = concat(w, _QUOT[a][b])
    return w


@dataclass
class LadderTrail:
    seed: Labelling
    strip: Labelling
    closure: str
    word: Word  # relator forced by closing the strip
    verdict: object  # Classification

    @property
    def contradiction(self) -> bool:
        return self.verdict.eliminated


def verify_ladder_exclusion(m: int, closure: str,
                            classifier_config: ClassifierConfig = DEFAULT_CONFIG) -> list[LadderTrail]:
    """Close a strip of ``m`` squares into a prism or a Moebius ladder.

    For every surviving two-square seed, the labelling is propagated down
    the strip and the identification of the end rung with the first one
    yields a relator: the top row ``a_1 ... a_{m+1} = a_1`` for the prism,
    the path ``a_1 ... a_{m+1} = b_1`` followed by the rung ``b_1 a_1`` for
    the Moebius ladder.
    """
    if m < 2:
        raise ValueError("need at least two squares")
    if closure not in ("prism", "moebius"):
        raise ValueError(f"unknown closure {closure!r}")
    cfg = _ladder(m)
    top = list(range(m + 1))
    trails = []
    for seed in sorted(shared_edge_labellings(classifier_config)):
        for strip in propagate_strip(m, seed, classifier_config):
            w = _path_word(cfg, strip, top)
            if closure == "moebius":
                w = concat(w, _path_word(cfg, strip, [m + 1, 0]))
            w = cyclic_reduce(w)[1]
            verdict = classify(Presentation([w]), classifier_config) if w.codes else None
            trails.append(LadderTrail(seed, strip, closure, w, verdict))
    return trails


# -- the single square ----------------------------------------------------------------


@dataclass
class SquareRow:
    row: int
    relation: Word
    verdict: object  # Classification
    representative: Labelling

    @property
    def eliminated(self) -> bool:
        return self.verdict.eliminated


def square_table(classifier_config: ClassifierConfig = DEFAULT_CONFIG) -> list[SquareRow]:
    """The classes of a free 4-cycle, matched to the reference rows and classified."""
    cfg = CycleConfig.cycle(4)
    out = []
    for tc in enumerate_labelings(cfg):
        (rel,) = tc.relations
        row = square_row(rel)
        if row is None:
            raise ValueError(f"square relation {rel} is missing from the reference list")
        out.append(SquareRow(row, rel, classify(Presentation([rel]), classifier_config), tc.representative))
    out.sort(key=lambda r: r.row)
    return out
