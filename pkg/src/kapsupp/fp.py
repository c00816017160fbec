"""Elimination of two-generator presentations <h2, h3 | R>.

A presentation that arises from a labelled cycle configuration must describe a
torsion-free, nonabelian group in which h2, h3 and the quotients of
{1, h2, h3} are nontrivial.  :func:`classify` tries the cheap syntactic routes
first and falls back to coset enumeration:

    torsion (with rewriting) -> abelian/cyclic -> Baumslag-Solitar -> finite

A finite group is already a contradiction: nontrivial means torsion, trivial
means h2 = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .cosets import FiniteOrder, Overflow, coset_enumerate
from .words import (
    IDENTITY,
    Word,
    all_words,
    canonical_relator,
    concat,
    cyclic_reduce,
    exponent_sums,
    invert,
    parse,
    power_root,
)
from . import reference

DEFAULT_MAX_COSETS = 100_000


# -- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class AbelianOrCyclic:
    relator: Word
    kind = "A"


@dataclass(frozen=True)
class TorsionWitness:
    root: Word
    exponent: int
    kind = "T"


@dataclass(frozen=True)
class BSQuotient:
    m: int
    n: int
    a: Word
    b: Word
    kind = "BS"


@dataclass(frozen=True)
class Finite:
    order: int
    kind = "F"


@dataclass(frozen=True)
class Unresolved:
    kind = "*"


@dataclass(frozen=True)
class Classification:
    verdict: object
    route_log: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    @property
    def eliminated(self) -> bool:
        return not isinstance(self.verdict, Unresolved)

    def label(self) -> str:
        v = self.verdict
        if isinstance(v, BSQuotient):
            return f"BS({v.m},{v.n})"
        if isinstance(v, Finite):
            return f"F{v.order}"
        return v.kind

    def to_json(self) -> dict:
        v = self.verdict
        out = {
            "relators": [str(r) for r in self.relators],
            "verdict": type(v).__name__,
            "label": self.label(),
            "route_log": list(self.route_log),
        }
        if isinstance(v, Finite):
            out["order"] = v.order
        if isinstance(v, TorsionWitness):
            out["root"], out["exponent"] = str(v.root), v.exponent
        if isinstance(v, BSQuotient):
            out.update(m=v.m, n=v.n, a=str(v.a), b=str(v.b))
        return out


# -- presentations ------------------------------------------------------------


class Presentation:
    """A nonempty set of cyclically reduced, nonidentity relators."""

    __slots__ = ("relators",)

    def __init__(self, relators):
        rels = []
        for r in relators:
            if isinstance(r, str):
                r = parse(r)
            core = cyclic_reduce(r)[1]
            if core.is_identity():
                raise ValueError(f"relator {r} is trivial")
            if core not in rels:
                rels.append(core)
        if not rels:
            raise ValueError("a presentation needs at least one relator")
        self.relators = tuple(rels)

    def key(self) -> frozenset:
        """Identifies presentations equal up to conjugating/inverting relators."""
        return frozenset(canonical_relator(r) for r in self.relators)

    def __repr__(self):
        return "<" + ", ".join(str(r) for r in self.relators) + ">"


class NontrivialityOracle:
    """Words known to be nontrivial: h2, h3 and the quotients h^-1 h' of {1, h2, h3}."""

    def __init__(self, words=("h2", "h2^-1", "h3", "h3^-1", "h2^-1*h3", "h3^-1*h2")):
        self.words = frozenset(parse(w) if isinstance(w, str) else w for w in words)
        self._classes = frozenset(canonical_relator(w) for w in self.words)

    def knows(self, w: Word) -> bool:
        # conjugates and inverses of nontrivial elements are nontrivial
        return canonical_relator(w) in self._classes


DEFAULT_ORACLE = NontrivialityOracle()


# -- routes -------------------------------------------------------------------


def detect_torsion(p: Presentation, oracle: NontrivialityOracle = DEFAULT_ORACLE):
    """Return a TorsionWitness, a rewritten Presentation, or None.

    A proper power u^m = 1 with u known nontrivial is torsion.  Otherwise
    torsion-freeness forces u = 1 and the relator is replaced by u.
    """
    out = []
    changed = False
    for r in p.relators:
        root, k = power_root(r)
        if k >= 2:
            if oracle.knows(root):
                return TorsionWitness(root, k)
            changed = True
            out.append(root)
        else:
            out.append(r)
    return Presentation(out) if changed else None


_COMMUTATOR = canonical_relator(parse("h2*h3*h2^-1*h3^-1"))


def _whitehead_images(w: Word):
    """Images of the cyclic word ``w`` under the non-permutation Whitehead automorphisms."""
    for a in (2, -2, 3, -3):
        other = 5 - abs(a)
        # x -> x a^(i), a^(-j) x   for the other generator x, (i, j) != (0, 0)
        for i, j in ((1, 0), (0, 1), (1, 1)):
            img = {}
            for x in (other, -other):
                if x > 0:
                    seq = ((-a,) if j else ()) + (x,) + ((a,) if i else ())
                else:
                    seq = ((-a,) if i else ()) + (x,) + ((a,) if j else ())
                img[x] = seq
            out = []
            for c in w.codes:
                out.extend(img.get(c, (c,)))
            yield cyclic_reduce(Word(out))[1]


def whitehead_minimize(w: Word) -> Word:
    """Shortest cyclic word reachable by length-reducing Whitehead moves."""
    w = cyclic_reduce(w)[1]
    improved = True
    while improved and len(w) > 1:
        improved = False
        for v in _whitehead_images(w):
            if len(v) < len(w):
                w, improved = v, True
                break
    return w


def is_primitive(w: Word) -> bool:
    """True iff ``w`` is part of a basis of the free group on h2, h3."""
    return len(whitehead_minimize(w)) == 1


def detect_abelian_or_cyclic(p: Presentation):
    """Fires when one relator already forces G to be abelian.

    That happens when the relator is primitive (G is then infinite cyclic;
    the simplest case is a generator occurring exactly once) or is the
    commutator of h2 and h3.
    """
    for r in p.relators:
        n2 = sum(1 for c in r.codes if abs(c) == 2)
        n3 = len(r) - n2
        if n2 == 1 or n3 == 1 or is_primitive(r):
            return AbelianOrCyclic(r)
        if exponent_sums(r) == (0, 0) and canonical_relator(r) == _COMMUTATOR:
            return AbelianOrCyclic(r)
    return None


def generates_free_group(a: Word, b: Word) -> bool:
    """True iff {a, b} generates the whole free group on h2, h3 (Stallings folding)."""
    if a.is_identity() or b.is_identity():
        return False
    arcs = set()  # (tail, generator, head) with positive generator
    nv = 1
    for w in (a, b):
        cur = 0
        for i, c in enumerate(w.codes):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = nv
                nv += 1
            arcs.add((cur, c, nxt) if c > 0 else (nxt, -c, cur))
            cur = nxt
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    while True:
        arcs = {(find(u), c, find(v)) for u, c, v in arcs}
        seen: dict = {}
        merged = False
        for u, c, v in arcs:
            for key, val in (((u, c, 1), v), ((v, c, -1), u)):
                old = seen.setdefault(key, val)
                x, y = find(old), find(val)
                if x != y:
                    parent[max(x, y)] = min(x, y)
                    merged = True
        if not merged:
            break
    verts = {find(x) for x in range(nv)}
    return len(verts) == 1 and arcs == {(0, 2, 0), (0, 3, 0)}


@lru_cache(maxsize=None)
def _bs_index():
    """Canonical relator -> (m, n, a, b) for the bounded BS search space."""
    index: dict[Word, tuple[int, int, Word, Word]] = {}
    words = all_words(3)
    exps = [(m, n) for m in range(-4, 5) for n in range(-4, 5)
            if m and n and min(abs(m), abs(n)) == 1]
    # prefer small exponents, then short words
    exps.sort(key=lambda e: (abs(e[0]) + abs(e[1]), -e[0], -e[1]))
    for a, b in itertools.product(words, repeat=2):
        if not generates_free_group(a, b):
            continue
        for m, n in exps:
            w = concat(concat(concat(b, a ** m), invert(b)), a ** -n)
            core = cyclic_reduce(w)[1]
            if core.is_identity():
                continue
            key = canonical_relator(core)
            old = index.get(key)
            cand = (m, n, a, b)
            if old is None or _bs_rank(cand) < _bs_rank(old):
                index[key] = cand
    return index


def _bs_rank(c):
    m, n, a, b = c
    return (abs(m) + abs(n), abs(m) > abs(n), m < 0, len(a) + len(b), n < 0, a.codes, b.codes)


def bs_relator(m: int, n: int, a: Word, b: Word) -> Word:
    return concat(concat(concat(b, a ** m), invert(b)), a ** -n)


def detect_bs_quotient(p: Presentation):
    index = _bs_index()
    for r in p.relators:
        hit = index.get(canonical_relator(r))
        if hit is not None:
            return BSQuotient(*hit)
    return None


def abelianization(p: Presentation) -> tuple[tuple[int, ...], int]:
    """Invariant factors (nonzero ones) and free rank of Z^2 / <exponent-sum rows>."""
    rows = [exponent_sums(r) for r in p.relators]
    d1 = 0
    for a, b in rows:
        d1 = gcd(d1, gcd(a, b))
    minors = 0
    for (a, b), (c, d) in itertools.combinations(rows, 2):
        minors = gcd(minors, a * d - b * c)
    divisors = [d1, minors // d1 if d1 else 0]
    factors = tuple(d for d in divisors if d > 1)
    free_rank = sum(1 for d in divisors if d == 0)
    return factors, free_rank


# -- chain --------------------------------------------------------------------


@dataclass(frozen=True)
class ClassifierConfig:
    max_cosets: int = DEFAULT_MAX_COSETS
    oracle: NontrivialityOracle = DEFAULT_ORACLE
    use_cosets: bool = True


DEFAULT_CONFIG = ClassifierConfig()


def classify(p: Presentation, config: ClassifierConfig = DEFAULT_CONFIG) -> Classification:
    if not isinstance(p, Presentation):
        p = Presentation(p)
    return _classify_cached(p.key(), p.relators, config)


_CACHE: dict = {}


def _classify_cached(key, relators, config):
    ck = (key, config.max_cosets, id(config.oracle), config.use_cosets)
    hit = _CACHE.get(ck)
    if hit is not None and hit.relators == relators:
        return hit
    res = _classify(Presentation(relators), config)
    _CACHE[ck] = res
    return res


def _classify(p: Presentation, config: ClassifierConfig) -> Classification:
    log: list[str] = []
    original = p.relators
    while True:
        log.append("torsion")
        t = detect_torsion(p, config.oracle)
        if isinstance(t, TorsionWitness):
            return Classification(t, tuple(log), original)
        if t is None:
            break
        p = t
        log[-1] = "torsion:rewrite"
    log.append("abelian")
    v = detect_abelian_or_cyclic(p)
    if v is not None:
        return Classification(v, tuple(log), original)
    log.append("bs")
    v = detect_bs_quotient(p)
    if v is not None:
        return Classification(v, tuple(log), original)
    if config.use_cosets:
        log.append("cosets")
        res = coset_enumerate(p.relators, config.max_cosets)
        if isinstance(res, FiniteOrder):
            return Classification(Finite(res.order), tuple(log), original)
    return Classification(Unresolved(), tuple(log), original)


# -- x^2 = y^3 substitutions ----------------------------------------------------


def _conjugates(r: Word, max_conj: int) -> set[Word]:
    out = set()
    conj = [IDENTITY] + all_words(max_conj)
    for base in (r, invert(r)):
        for c in conj:
            out.add(concat(concat(c, base), invert(c)))
    return out


def certify_in_normal_closure(target: Word, r: Word, max_factors: int = 3, max_conj: int = 4):
    """Write ``target`` as a product of at most ``max_factors`` conjugates of r^±1.

    Returns the list of factors or None.  Meet in the middle over two halves.
    """
    if target.is_identity():
        return []
    conj = sorted(_conjugates(r, max_conj), key=lambda w: (len(w), w.codes))
    singles = {w: [w] for w in conj}
    if target in singles:
        return [target]
    if max_factors < 2:
        return None
    pairs: dict[Word, list[Word]] = {}
    for u in conj:
        for v in conj:
            pairs.setdefault(concat(u, v), [u, v])
    if target in pairs:
        return pairs[target]
    if max_factors < 3:
        return None
    for u in conj:
        rest = concat(invert(u), target)
        if rest in pairs:
            return [u] + pairs[rest]
    return None


def derive_x2_y3_witness(row: int):
    """Substitution (x, y, form) with x^2 = y^3 for a surviving square relation.

    ``form`` is ``"{1,x,y}"`` or ``"{1,y,y^-1x}"``.  Raises ValueError when the
    identity x^2 y^-3 = 1 cannot be certified from the relator.
    """
    x, y, form = reference.witness_substitution(row)
    r = reference.square_relation(row)
    target = concat(x ** 2, y ** -3)
    proof = certify_in_normal_closure(target, r)
    if proof is None:
        raise ValueError(f"cannot certify x^2 = y^3 for row {row}")
    return x, y, "{1,x,y}" if form == "xy" else "{1,y,y^-1x}"
