"""Canonical labelling of small graphs of maximum degree 3.

Partition refinement seeded with closed-walk counts, then an
individualise-and-refine search tree; the canonical form is the
lexicographically least relabelled neighbour table over all leaves.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_DEGREE = 3


def neighbour_table(n: int, edges) -> np.ndarray:
    """``n x 3`` table of neighbours, padded with -1."""
    nbr = np.full((n, MAX_DEGREE), -1, dtype=np.int64)
    deg = [0] * n
    for u, v in edges:
        if deg[u] >= MAX_DEGREE or deg[v] >= MAX_DEGREE:
            raise ValueError("degree exceeds 3")
        nbr[u, deg[u]] = v
        nbr[v, deg[v]] = u
        deg[u] += 1
        deg[v] += 1
    return nbr


@njit(cache=True)
def _dense_rank(keys):
    n = keys.shape[0]
    order = np.argsort(keys, kind="mergesort")
    out = np.empty(n, dtype=np.int64)
    r = -1
    prev = 0
    for i in range(n):
        k = keys[order[i]]
        if i == 0 or k != prev:
            r += 1
            prev = k
        out[order[i]] = r
    return out, r + 1


@njit(cache=True)
def _refine(nbr, c):
    n = c.shape[0]
    base = n + 1
    k = 0
    for v in range(n):
        if c[v] + 1 > k:
            k = c[v] + 1
    while True:
        keys = np.empty(n, dtype=np.int64)
        for v in range(n):
            r = np.full(MAX_DEGREE, n, dtype=np.int64)
            for j in range(MAX_DEGREE):
                w = nbr[v, j]
                if w >= 0:
                    r[j] = c[w]
            r.sort()
            key = c[v]
            for j in range(MAX_DEGREE):
                key = key * base + r[j]
            keys[v] = key
        c2, k2 = _dense_rank(keys)
        c = c2
        if k2 == k:
            return c, k
        k = k2


@njit(cache=True)
def _initial(nbr):
    n = nbr.shape[0]
    a = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for j in range(MAX_DEGREE):
            w = nbr[v, j]
            if w >= 0:
                a[v, w] = 1
    keys = np.zeros(n, dtype=np.int64)
    p = a.copy()
    for v in range(n):
        keys[v] = (a[v] > 0).sum()
    for step in range(2, 8):
        q = np.zeros((n, n), dtype=np.int64)
        for w in range(n):
            for j in range(MAX_DEGREE):
                x = nbr[w, j]
                if x >= 0:
                    q[:, w] += p[:, x]
        p = q
        for v in range(n):
            keys[v] = keys[v] * 1000003 + p[v, v]
    c, k = _dense_rank(keys)
    return c


@njit(cache=True)
def _leaf_code(nbr, c):
    n = c.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for v in range(n):
        inv[c[v]] = v
    code = np.empty(n * MAX_DEGREE, dtype=np.int64)
    for i in range(n):
        v = inv[i]
        r = np.full(MAX_DEGREE, n, dtype=np.int64)
        for j in range(MAX_DEGREE):
            w = nbr[v, j]
            if w >= 0:
                r[j] = c[w]
        r.sort()
        for j in range(MAX_DEGREE):
            code[i * MAX_DEGREE + j] = r[j]
    return code


@njit(cache=True)
def _less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


@njit(cache=True)
def _canonical(nbr):
    n = nbr.shape[0]
    parts = np.empty((n + 1, n), dtype=np.int64)
    cand = np.empty((n + 1, n), dtype=np.int64)
    ncand = np.zeros(n + 1, dtype=np.int64)
    pos = np.zeros(n + 1, dtype=np.int64)
    best = np.full(n * MAX_DEGREE, n + 1, dtype=np.int64)
    best_lab = np.arange(n)
    c0, k0 = _refine(nbr, _initial(nbr))
    if k0 == n:
        return c0, _leaf_code(nbr, c0)
    parts[0] = c0
    depth = 0
    # candidates at depth 0
    sizes = np.zeros(n, dtype=np.int64)
    for v in range(n):
        sizes[c0[v]] += 1
    target = 0
    while sizes[target] < 2:
        target += 1
    m = 0
    for v in range(n):
        if c0[v] == target:
            cand[0, m] = v
            m += 1
    ncand[0] = m
    pos[0] = 0
    while depth >= 0:
        if pos[depth] >= ncand[depth]:
            depth -= 1
            continue
        v = cand[depth, pos[depth]]
        pos[depth] += 1
        c = parts[depth]
        t = c[v]
        keys = np.empty(n, dtype=np.int64)
        for u in range(n):
            keys[u] = 2 * c[u] + (1 if (c[u] == t and u != v) else 0)
        ci, _ = _dense_rank(keys)
        c2, k2 = _refine(nbr, ci)
        if k2 == n:
            code = _leaf_code(nbr, c2)
            if _less(code, best):
                best[:] = code
                best_lab[:] = c2
            continue
        depth += 1
        parts[depth] = c2
        sizes[:] = 0
        for u in range(n):
            sizes[c2[u]] += 1
        target = 0
        while sizes[target] < 2:
            target += 1
        m = 0
        for u in range(n):
            if c2[u] == target:
                cand[depth, m] = u
                m += 1
        ncand[depth] = m
        pos[depth] = 0
    return best_lab, best


def canonical_labelling(n: int, edges) -> tuple[np.ndarray, bytes]:
    """Return ``(lab, certificate)``: vertex v goes to ``lab[v]``.

    Two graphs are isomorphic iff their certificates are equal.
    """
    if n == 0:
        return np.zeros(0, dtype=np.int64), b""
    lab, code = _canonical(neighbour_table(n, edges))
    return lab, n.to_bytes(2, "little") + code.astype(np.int8).tobytes()


def certificate(n: int, edges) -> bytes:
    return canonical_labelling(n, edges)[1]


def canonical_edges(n: int, edges) -> tuple[tuple[int, int], ...]:
    lab, _ = canonical_labelling(n, edges)
    return tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in edges))


@njit(cache=True)
def _has_triangle(nbr):
    n = nbr.shape[0]
    for v in range(n):
        for i in range(MAX_DEGREE):
            a = nbr[v, i]
            if a < 0:
                continue
            for j in range(i + 1, MAX_DEGREE):
                b = nbr[v, j]
                if b < 0:
                    continue
                for s in range(MAX_DEGREE):
                    if nbr[a, s] == b:
                        return True
    return False


@njit(cache=True)
def _insertion_children(nbr, edges, triangle_free, split):
    """Certificates of graphs obtained by subdividing two distinct edges and joining the new vertices.

    With ``triangle_free`` set, only triangle-free children are kept.  With
    ``split > 0`` the first edge must lie below vertex ``split`` and the
    second at or above it (the two components of a disjoint union).
    """
    n = nbr.shape[0]
    m = edges.shape[0]
    cap = m * (m - 1) // 2
    codes = np.empty((cap, (n + 2) * MAX_DEGREE), dtype=np.int64)
    cnt = 0
    child = np.full((n + 2, MAX_DEGREE), -1, dtype=np.int64)
    x = n
    y = n + 1
    for i in range(m):
        a = edges[i, 0]
        b = edges[i, 1]
        for j in range(i + 1, m):
            c = edges[j, 0]
            d = edges[j, 1]
            if triangle_free and (a == c or a == d or b == c or b == d):
                continue
            if split > 0 and (a >= split or c < split):
                continue
            child[:n] = nbr
            for s in range(MAX_DEGREE):
                if child[a, s] == b:
                    child[a, s] = x
                if child[b, s] == a:
                    child[b, s] = x
                if child[c, s] == d:
                    child[c, s] = y
                if child[d, s] == c:
                    child[d, s] = y
            child[x, 0] = a
            child[x, 1] = b
            child[x, 2] = y
            child[y, 0] = c
            child[y, 1] = d
            child[y, 2] = x
            if triangle_free and _has_triangle(child):
                continue
            lab, code = _canonical(child)
            codes[cnt] = code
            cnt += 1
    return codes[:cnt]


def has_triangle(n: int, edges) -> bool:
    return bool(_has_triangle(neighbour_table(n, edges)))


def insertion_children(n: int, edges, triangle_free: bool = False, split: int = 0) -> list[bytes]:
    """Certificates of the edge-insertion children of a cubic graph on ``n`` vertices."""
    nbr = neighbour_table(n, edges)
    e = np.array(sorted(edges), dtype=np.int64).reshape(-1, 2)
    codes = _insertion_children(nbr, e, triangle_free, split)
    head = (n + 2).to_bytes(2, "little")
    return [head + row.astype(np.int8).tobytes() for row in codes]


def edges_from_certificate(cert: bytes) -> tuple[tuple[int, int], ...]:
    n = int.from_bytes(cert[:2], "little")
    code = np.frombuffer(cert[2:], dtype=np.int8).reshape(n, MAX_DEGREE)
    out = set()
    for i in range(n):
        for w in code[i]:
            if w < n:
                out.add((min(i, int(w)), max(i, int(w))))
    return tuple(sorted(out))
