"""Todd-Coxeter coset enumeration over the trivial subgroup (Felsch strategy).

Columns are ``0: h2, 1: h2^-1, 2: h3, 3: h3^-1``.  The hot loop is compiled
with numba; everything else is thin plumbing around it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .words import Word

NGENS = 4
_COL = {2: 0, -2: 1, 3: 2, -3: 3}
_INV = np.array([1, 0, 3, 2], dtype=np.int64)


@dataclass(frozen=True)
class FiniteOrder:
    order: int
    table: np.ndarray  # coset table, rows = elements, coset 0 = identity

    def __repr__(self):
        return f"FiniteOrder({self.order})"


@dataclass(frozen=True)
class Overflow:
    max_cosets: int


def _columns(w: Word) -> list[int]:
    return [_COL[c] for c in w.codes]


def _conjugate_table(relators: list[Word]):
    """Cyclic conjugates of every relator and its inverse, grouped by first column."""
    rels = []
    for r in relators:
        cols = _columns(r)
        inv = [int(_INV[c]) for c in reversed(cols)]
        for seq in (cols, inv):
            for i in range(len(seq)):
                rels.append(seq[i:] + seq[:i])
    rels = sorted(set(tuple(s) for s in rels))
    maxlen = max(len(s) for s in rels)
    flat = np.full((len(rels), maxlen), -1, dtype=np.int64)
    lens = np.zeros(len(rels), dtype=np.int64)
    for i, s in enumerate(rels):
        flat[i, : len(s)] = s
        lens[i] = len(s)
    return flat, lens


@njit(cache=True)
def _rep(p, c):
    r = c
    while p[r] != r:
        r = p[r]
    while p[c] != r:
        n = p[c]
        p[c] = r
        c = n
    return r


@njit(cache=True)
def _merge(p, queue, qlen, a, b):
    ra = _rep(p, a)
    rb = _rep(p, b)
    if ra == rb:
        return qlen
    lo = min(ra, rb)
    hi = max(ra, rb)
    p[hi] = lo
    queue[qlen] = hi
    return qlen + 1


@njit(cache=True)
def _push(stack, sp, c, x):
    if sp[0] < stack.shape[0]:
        stack[sp[0], 0] = c
        stack[sp[0], 1] = x
        sp[0] += 1
    else:
        sp[1] = 1  # overflowed: fall back to a full lookahead


@njit(cache=True)
def _coincidence(table, p, queue, stack, sp, inv, a, b):
    qlen = _merge(p, queue, 0, a, b)
    i = 0
    while i < qlen:
        g = queue[i]
        i += 1
        for x in range(4):
            d = table[g, x]
            if d < 0:
                continue
            xi = inv[x]
            table[d, xi] = -1
            mu = _rep(p, g)
            nu = _rep(p, d)
            if table[mu, x] >= 0:
                qlen = _merge(p, queue, qlen, nu, table[mu, x])
            elif table[nu, xi] >= 0:
                qlen = _merge(p, queue, qlen, mu, table[nu, xi])
            else:
                table[mu, x] = nu
                table[nu, xi] = mu
                _push(stack, sp, mu, x)


@njit(cache=True)
def _scan(table, p, queue, stack, sp, inv, c, rel, n):
    """Scan relator ``rel`` (length n) at coset c; deduce or find coincidences."""
    f = c
    i = 0
    b = c
    j = n - 1
    while i <= j and table[f, rel[i]] >= 0:
        f = table[f, rel[i]]
        i += 1
    if i > j:
        if f != b:
            _coincidence(table, p, queue, stack, sp, inv, f, b)
        return
    while j >= i and table[b, inv[rel[j]]] >= 0:
        b = table[b, inv[rel[j]]]
        j -= 1
    if j < i:
        _coincidence(table, p, queue, stack, sp, inv, f, b)
    elif i == j:
        table[f, rel[i]] = b
        table[b, inv[rel[i]]] = f
        _push(stack, sp, f, rel[i])


@njit(cache=True)
def _process(table, p, queue, stack, sp, inv, rels, lens, ncos):
    while True:
        while sp[0] > 0:
            sp[0] -= 1
            c = stack[sp[0], 0]
            x = stack[sp[0], 1]
            if p[c] != c:
                continue
            for r in range(rels.shape[0]):
                if rels[r, 0] == x:
                    _scan(table, p, queue, stack, sp, inv, c, rels[r], lens[r])
                    if p[c] != c:
                        break
            if p[c] != c:
                continue
            d = table[c, x]
            if d >= 0 and p[d] == d:
                xi = inv[x]
                for r in range(rels.shape[0]):
                    if rels[r, 0] == xi:
                        _scan(table, p, queue, stack, sp, inv, d, rels[r], lens[r])
                        if p[d] != d:
                            break
        if sp[1] == 0:
            return
        sp[1] = 0
        for c in range(ncos):
            for r in range(rels.shape[0]):
                if p[c] != c:
                    break
                _scan(table, p, queue, stack, sp, inv, c, rels[r], lens[r])


@njit(cache=True)
def _enumerate(rels, lens, max_cosets, inv):
    cap = max_cosets + 1
    table = np.full((cap, 4), -1, dtype=np.int64)
    p = np.arange(cap, dtype=np.int64)
    queue = np.zeros(cap, dtype=np.int64)
    stack = np.zeros((4 * cap + 64, 2), dtype=np.int64)
    sp = np.zeros(2, dtype=np.int64)
    ncos = 1
    c = 0
    while c < ncos:
        if p[c] == c:
            for x in range(4):
                if p[c] != c:
                    break
                if table[c, x] < 0:
                    if ncos >= cap - 1:
                        return table, p, -1
                    d = ncos
                    ncos += 1
                    table[c, x] = d
                    table[d, inv[x]] = c
                    _push(stack, sp, c, x)
                    _process(table, p, queue, stack, sp, inv, rels, lens, ncos)
        c += 1
    return table[:ncos], p[:ncos], ncos


def _compact(table: np.ndarray, p: np.ndarray) -> np.ndarray:
    live = np.flatnonzero(p == np.arange(len(p)))
    index = np.full(len(p), -1, dtype=np.int64)
    index[live] = np.arange(len(live))
    out = index[table[live]]
    return out


def coset_enumerate(relators, max_cosets: int = 100_000):
    """Enumerate cosets of the trivial subgroup of <h2, h3 | relators>.

    Returns :class:`FiniteOrder` (with the compacted coset table) or
    :class:`Overflow` when more than ``max_cosets`` cosets would be defined.
    """
    relators = [r for r in relators]
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    for r in relators:
        if not isinstance(r, Word):
            raise TypeError(f"relator {r!r} is not a Word")
    relators = [r for r in relators if len(r)]
    if not relators:
        return Overflow(max_cosets)  # free group
    rels, lens = _conjugate_table(relators)
    table, p, ncos = _enumerate(rels, lens, max_cosets, _INV)
    if ncos < 0:
        return Overflow(max_cosets)
    t = _compact(table, p)
    return FiniteOrder(len(t), t)


def multiplication_table(table: np.ndarray) -> np.ndarray:
    """Group multiplication table from a complete coset table of the trivial subgroup."""
    n = len(table)
    # word (column sequence) reaching each coset from 0, by BFS
    words: list = [None] * n
    words[0] = []
    order = [0]
    for c in order:
        for x in range(4):
            d = int(table[c, x])
            if words[d] is None:
                words[d] = words[c] + [x]
                order.append(d)
    mult = np.empty((n, n), dtype=np.int64)
    cur = np.arange(n)
    for b in range(n):
        v = cur
        for x in words[b]:
            v = table[v, x]
        mult[:, b] = v
    return mult
