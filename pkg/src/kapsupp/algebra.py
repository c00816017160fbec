"""Group algebras F_p[G] over small explicit groups and their support graphs.

For a pair (a, b) with ab = 0 (zero-divisor graph) or ab = 1 (unit graph)
the support graph has vertex set supp(b) and one edge {g, g'} for each
unordered coincidence hg = h'g' with h, h' in supp(a) and g != g'.
Such graphs can carry parallel edges, so edges are kept as a list.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field

import networkx as nx

ZERO_DIVISOR = "zero_divisor"
UNIT = "unit"


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table on 0..order-1."""

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    identity: int = 0

    def __post_init__(self):
        n = len(self.table)
        if any(len(row) != n for row in self.table) or len(self.names) != n:
            raise ValueError("table must be square and match the names")
        t = self.table
        e = self.identity
        if any(t[e][x] != x or t[x][e] != x for x in range(n)):
            raise ValueError("identity is not neutral")
        for x in range(n):
            if sorted(t[x]) != list(range(n)):
                raise ValueError("row is not a permutation")
            if not any(t[x][y] == e for y in range(n)):
                raise ValueError("missing inverse")
        if n <= 200:
            for x, y, z in itertools.product(range(n), repeat=3):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    raise ValueError("table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.table[x].index(self.identity)

    def index(self, name: str) -> int:
        return self.names.index(name)


def cyclic_group(n: int, symbol: str = "x") -> FiniteGroup:
    names = tuple("1" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}") for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(table, names)


@dataclass(frozen=True)
class GroupAlgebraElement:
    group: FiniteGroup
    p: int
    coeffs: tuple[tuple[int, int], ...] = ()  # sorted (element, nonzero coefficient mod p)

    @classmethod
    def from_dict(cls, group: FiniteGroup, p: int, coeffs: dict) -> "GroupAlgebraElement":
        clean = {}
        for g, c in coeffs.items():
            c %= p
            if c:
                clean[g] = c
        return cls(group, p, tuple(sorted(clean.items())))

    @classmethod
    def parse(cls, text: str, group: FiniteGroup, p: int) -> "GroupAlgebraElement":
        """Parse ``c*x^k + ...`` for a cyclic group written in the generator ``x``."""
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ValueError("empty element")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?(?:([a-z])(?:\^(\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse term {body!r}")
            c = int(m.group(1)) if m.group(1) else 1
            k = 0 if m.group(2) is None else int(m.group(3) or 1)
            g = _power(group, group.index(m.group(2)), k) if m.group(2) else group.identity
            coeffs[g] = coeffs.get(g, 0) + (c if sign == "+" else -c)
        return cls.from_dict(group, p, coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(g for g, _ in self.coeffs)

    def coefficient(self, g: int) -> int:
        return dict(self.coeffs).get(g, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == ((self.group.identity, 1),)

    def left_translate(self, x: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_dict(self.group, self.p, {self.group.mul(x, g): c for g, c in self.coeffs})

    def right_translate(self, y: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_dict(self.group, self.p, {self.group.mul(g, y): c for g, c in self.coeffs})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return multiply(self, other)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for g, c in self.coeffs:
            c = c if 2 * c <= self.p else c - self.p  # print balanced residues
            name = self.group.names[g]
            mag = abs(c)
            if name == "1":
                t = str(mag)
            else:
                t = name if mag == 1 else f"{mag}*{name}"
            terms.append(("-" if c < 0 else "+") + t)
        out = "".join(terms)
        return out[1:] if out[0] == "+" else out


def _power(group: FiniteGroup, x: int, k: int) -> int:
    r = group.identity
    for _ in range(k):
        r = group.mul(r, x)
    return r


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    if a.group is not b.group and a.group != b.group:
        raise ValueError("elements live in different groups")
    if a.p != b.p:
        raise ValueError("elements live over different fields")
    out: dict = {}
    for g, c in a.coeffs:
        for h, d in b.coeffs:
            k = a.group.mul(g, h)
            out[k] = out.get(k, 0) + c * d
    return GroupAlgebraElement.from_dict(a.group, a.p, out)


@dataclass
class SupportGraph:
    kind: str
    vertices: tuple[int, ...]
    edges: list  # (h, h', g, g') with g < g' in vertex order; one per unordered coincidence
    names: tuple[str, ...] = field(default=(), repr=False)

    def endpoints(self) -> list[tuple[int, int]]:
        return [(g, g2) for _, _, g, g2 in self.edges]

    def multiplicities(self) -> Counter:
        return Counter(frozenset(e) for e in self.endpoints())

    def degree(self, v: int) -> int:
        return sum((g == v) + (g2 == v) for g, g2 in self.endpoints())

    def to_networkx(self) -> nx.MultiGraph:
        m = nx.MultiGraph()
        m.add_nodes_from(self.vertices)
        m.add_edges_from(self.endpoints())
        return m

    def to_json(self) -> dict:
        name = (lambda g: self.names[g]) if self.names else str
        return {
            "kind": self.kind,
            "vertices": [name(v) for v in self.vertices],
            "edges": [{"h": name(h), "h2": name(h2), "g": name(g), "g2": name(g2)}
                      for h, h2, g, g2 in self.edges],
        }


def build_support_graph(a: GroupAlgebraElement, b: GroupAlgebraElement, kind: str) -> SupportGraph:
    prod = multiply(a, b)
    if kind == ZERO_DIVISOR:
        if a.is_zero() or b.is_zero() or not prod.is_zero():
            raise ValueError(f"zero-divisor graph needs nonzero a, b with ab = 0; got ab = {prod}")
    elif kind == UNIT:
        if not prod.is_one():
            raise ValueError(f"unit graph needs ab = 1; got ab = {prod}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    grp = a.group
    verts = b.support
    pos = {g: i for i, g in enumerate(verts)}
    edges = []
    for h, h2 in itertools.permutations(a.support, 2):
        for g, g2 in itertools.permutations(verts, 2):
            # the ordered quadruple and its mirror give the same edge; keep g before g'
            if pos[g] < pos[g2] and grp.mul(h, g) == grp.mul(h2, g2):
                edges.append((h, h2, g, g2))
    return SupportGraph(kind, verts, edges, grp.names)


@dataclass
class StructureReport:
    simple: bool
    cubic: bool
    triangle_free: bool
    connected: bool
    expected: dict  # predicate -> required value, only where the context licenses it

    def violations(self) -> list[str]:
        return [k for k, v in self.expected.items() if getattr(self, k) != v]


def structural_checks(g: SupportGraph, field_is_F2: bool = False, alpha_support_size: int = 0,
                      beta_minimal: bool = False, torsion_free: bool = False) -> StructureReport:
    mult = g.multiplicities()
    simple = all(c == 1 for c in mult.values())
    cubic = all(g.degree(v) == 3 for v in g.vertices)
    simple_g = nx.Graph()
    simple_g.add_nodes_from(g.vertices)
    simple_g.add_edges_from(tuple(e) for e in mult)
    triangle_free = sum(nx.triangles(simple_g).values()) == 0
    connected = nx.is_connected(simple_g) if g.vertices else False
    expected = {}
    if alpha_support_size == 3 and torsion_free:
        expected["simple"] = True
    if beta_minimal:
        expected["connected"] = True
    if field_is_F2 and alpha_support_size == 3 and torsion_free and beta_minimal:
        expected["cubic"] = True
        expected["triangle_free"] = True
    return StructureReport(simple, cubic, triangle_free, connected, expected)


@dataclass
class Translation:
    alpha: GroupAlgebraElement
    beta: GroupAlgebraElement
    vertex_map: dict  # g -> g y
    graph: SupportGraph
    image: SupportGraph

    def certified(self) -> bool:
        """The vertex map is a bijection carrying the edge multiset onto the image's."""
        if sorted(self.vertex_map.values()) != sorted(self.image.vertices):
            return False
        mapped = Counter(frozenset((self.vertex_map[u], self.vertex_map[v])) for u, v in self.graph.endpoints())
        return mapped == self.image.multiplicities()


def translate(a: GroupAlgebraElement, b: GroupAlgebraElement, x: int, y: int, kind: str) -> Translation:
    """Replace (a, b) by (xa, by); for unit graphs y must be x^-1."""
    grp = a.group
    if kind == UNIT and grp.mul(x, y) != grp.identity:
        raise ValueError("unit graphs translate as (x^-1 a, b x)")
    a2 = a.left_translate(x)
    b2 = b.right_translate(y)
    vmap = {g: grp.mul(g, y) for g in b.support}
    return Translation(a2, b2, vmap, build_support_graph(a, b, kind), build_support_graph(a2, b2, kind))


# worked examples over cyclic groups

def example_pairs() -> dict:
    """The five worked support graphs as (a, b, kind) triples."""
    c7, c3, c8 = cyclic_group(7), cyclic_group(3), cyclic_group(8)
    a1 = GroupAlgebraElement.parse("1+x^2+x^3+x^4", c7, 2)
    b1 = GroupAlgebraElement.parse("1+x+x^5", c7, 2)
    a2 = GroupAlgebraElement.parse("-1+x-x^2", c3, 3)
    b2 = GroupAlgebraElement.parse("1+x", c3, 3)
    a3 = GroupAlgebraElement.parse("-1-x+x^3+2*x^4+x^5-x^7", c8, 3)
    b3 = GroupAlgebraElement.parse("-1+x-x^3+2*x^4-x^5+x^7", c8, 3)
    return {
        "Z(1+x^2+x^3+x^4, 1+x+x^5)": (a1, b1, ZERO_DIVISOR),
        "Z(1+x+x^5, 1+x^2+x^3+x^4)": (b1, a1, ZERO_DIVISOR),
        "U(-1+x-x^2, 1+x)": (a2, b2, UNIT),
        "U(1+x, -1+x-x^2)": (b2, a2, UNIT),
        "U(-1-x+x^3+2x^4+x^5-x^7, -1+x-x^3+2x^4-x^5+x^7)": (a3, b3, UNIT),
    }
