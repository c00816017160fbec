"""Counting arguments for small supports of zero divisors and units.

Setting: a has support {h1, h2, h3}, b has support {g1..gn}, and the 3n
products h_i g_j fall into classes of equal group elements.  Writing s for
the number of classes, product-set theorems give a lower bound on s, while
cancellation forces every class to have size at least 2 (except the class
of the identity when ab = 1).  Each n is settled by enumerating every
multiset of class sizes compatible with both, and disposing of what is
left by reduction to coefficients in F_2 plus a cited external result, or
(for units with n = 8) by an exhaustive graph completion.

External results are never re-proved; they enter as named oracles with
explicit applicability conditions and are tagged in the trail.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import networkx as nx

KEMPERMAN = "kemperman"
HAMIDOUNE = "hamidoune"

# oracle names usable with --no-oracle
CENSUS = "census"  # no F2 zero divisor with supports of sizes 3 and n for n < 20
DYKEMA = "dykema"  # no F2 unit with supports of sizes 3 and n for n in the applicable set
ORACLES = (CENSUS, DYKEMA)

CENSUS_BOUND = 20

# Two readings of the unit result's size condition.  The literal statement
# covers odd sizes >= 13; the arguments apply it at sizes 3, 7 and 9.
DYKEMA_LITERAL = "literal"
DYKEMA_AS_APPLIED = "as_applied"


def dykema_applies(size: int, reading: str = DYKEMA_AS_APPLIED) -> bool:
    if reading == DYKEMA_LITERAL:
        return size >= 13 and size % 2 == 1
    if reading == DYKEMA_AS_APPLIED:
        return size >= 3 and size % 2 == 1
    raise ValueError(f"unknown reading {reading!r}")


@dataclass(frozen=True)
class ProductSetBound:
    b: int
    c: int
    regime: str
    bound: int


def product_bound(b: int, c: int, regime: str, *, one_in_c: bool = True,
                  nonabelian: bool = True) -> ProductSetBound:
    """Lower bound on |BC| for finite subsets of a torsion-free group."""
    if b < 1 or c < 1:
        raise ValueError("set sizes must be positive")
    if regime == KEMPERMAN:
        return ProductSetBound(b, c, regime, b + c - 1)
    if regime == HAMIDOUNE:
        if c < 4 or b < 3 or not one_in_c or not nonabelian:
            raise ValueError("needs |C| >= 4, 1 in C, |B| >= 3 and a nonabelian group")
        return ProductSetBound(b, c, regime, b + c + 1)
    raise ValueError(f"unknown regime {regime!r}")


@dataclass
class Step:
    kind: str  # bound, pigeonhole, profiles, reduction, oracle, search, axiom
    cites: str
    detail: str
    oracle: str | None = None

    def to_json(self) -> dict:
        d = {"step": self.kind, "cites": self.cites, "detail": self.detail}
        if self.oracle:
            d["oracle"] = self.oracle
        return d


@dataclass
class ContradictionTrail:
    mode: str  # zero_divisor | unit
    n: int
    steps: list = field(default_factory=list)
    verdict: str = "open"  # infeasible | open
    blocked_by: list = field(default_factory=list)

    def add(self, kind, cites, detail, oracle=None):
        self.steps.append(Step(kind, cites, detail, oracle))

    def to_json(self) -> dict:
        return {"mode": self.mode, "n": self.n, "verdict": self.verdict,
                "blocked_by": self.blocked_by, "steps": [s.to_json() for s in self.steps]}

    def text(self) -> str:
        head = f"{self.mode} n={self.n}: {self.verdict}"
        if self.blocked_by:
            head += f" (needs oracle: {', '.join(self.blocked_by)})"
        lines = [head]
        for i, s in enumerate(self.steps, 1):
            tag = f" [oracle {s.oracle}]" if s.oracle else ""
            lines.append(f"  {i}. {s.kind}: {s.detail} ({s.cites}){tag}")
        return "\n".join(lines)


def block_profiles(total: int, blocks: int, unit: bool) -> list[tuple[int, tuple[int, ...]]]:
    """Class-size profiles: (size of the identity's class, sorted other sizes).

    Zero divisors: every class has size >= 2 (the first entry is 0 and unused).
    Units: the identity's class has size >= 1, every other class size >= 2.
    """
    out = []
    if unit:
        for e1 in range(1, total + 1):
            for rest in _partitions(total - e1, blocks - 1, 2):
                out.append((e1, rest))
    else:
        for rest in _partitions(total, blocks, 2):
            out.append((0, rest))
    return out


def _partitions(total: int, parts: int, least: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Nonincreasing tuples of ``parts`` integers >= least summing to total."""
    if parts == 0:
        return [()] if total == 0 else []
    cap = total if cap is None else cap
    out = []
    for first in range(min(cap, total - least * (parts - 1)), least - 1, -1):
        for tail in _partitions(total - first, parts - 1, least, first):
            out.append((first,) + tail)
    return out


def _lower_bound(n: int, trail: ContradictionTrail) -> int:
    if n <= 3:
        pb = product_bound(3, n, KEMPERMAN)
        trail.add("bound", "Kemperman", f"|supp(a) supp(b)| >= 3 + {n} - 1 = {pb.bound}")
    else:
        trail.add("axiom", "abelian torsion-free groups satisfy the conjectures", "the group is nonabelian")
        pb = product_bound(3, n, HAMIDOUNE)
        trail.add("bound", "Hamidoune", f"|supp(a) supp(b)| >= 3 + {n} + 1 = {pb.bound}")
    return pb.bound


def _f2_reduction(profile, unit: bool) -> str | None:
    e1, rest = profile
    sizes = ([e1] if unit else []) + list(rest)
    odd = sum(s % 2 for s in sizes)
    if odd == 0:
        return "zero_divisor"
    if odd == 1:
        return "unit"
    return None


def _settle(n: int, unit: bool, disabled: frozenset, reading: str) -> ContradictionTrail:
    mode = "unit" if unit else "zero_divisor"
    trail = ContradictionTrail(mode, n)
    total = 3 * n
    lo = _lower_bound(n, trail)
    trail.add("bound", "trivial", f"|supp(a) supp(b)| <= 3 * {n} = {total}")
    open_profiles = []
    ruled_out = []
    for s in range(lo, total + 1):
        profs = block_profiles(total, s, unit)
        if not profs:
            ruled_out.append(s)
        for p in profs:
            open_profiles.append((s, p))
    if ruled_out:
        s0 = ruled_out[0]
        least = (1 + 2 * (s0 - 1)) if unit else 2 * s0
        span = f"s = {s0}" if len(ruled_out) == 1 else f"s = {s0}..{ruled_out[-1]}"
        trail.add("pigeonhole", "cancellation",
                  f"{span} classes impossible: {s0} classes already need {least} products "
                  f"but only {total} exist (slack {total} - {s0} = {total - s0})")
    desc = ", ".join(f"s={s}: {_fmt(p, unit)}" for s, p in open_profiles) or "none"
    trail.add("profiles", "exhaustive enumeration", f"class-size profiles surviving: {desc}")
    blocked = set()
    for s, p in open_profiles:
        red = _f2_reduction(p, unit)
        if red == "zero_divisor":
            trail.add("reduction", "replace coefficients by 1",
                      f"profile {_fmt(p, unit)} has only even classes, so over F_2 the support sums "
                      f"give a zero divisor with supports of sizes 3 and {n}")
            if CENSUS in disabled:
                blocked.add(CENSUS)
                trail.add("oracle", f"F_2 zero divisors need support >= {CENSUS_BOUND}", "disabled", CENSUS)
            elif n < CENSUS_BOUND:
                trail.add("oracle", f"F_2 zero divisors need support >= {CENSUS_BOUND}",
                          f"{n} < {CENSUS_BOUND}: contradiction", CENSUS)
            else:
                blocked.add(CENSUS)
        elif red == "unit":
            trail.add("reduction", "replace coefficients by 1 and translate",
                      f"profile {_fmt(p, unit)} has one odd class, so over F_2 the support sums "
                      f"give a unit with supports of sizes 3 and {n}")
            if DYKEMA in disabled:
                blocked.add(DYKEMA)
                trail.add("oracle", "no F_2 units with supports of sizes 3 and odd n", "disabled", DYKEMA)
            elif dykema_applies(n, reading):
                trail.add("oracle", "no F_2 units with supports of sizes 3 and odd n",
                          f"size {n} covered under the {reading} reading: contradiction", DYKEMA)
            else:
                blocked.add(DYKEMA)
                trail.add("oracle", "no F_2 units with supports of sizes 3 and odd n",
                          f"size {n} not covered under the {reading} reading", DYKEMA)
        elif unit and n == 8 and p == (1, (3,) + (2,) * 10):
            res = search_unit_order8()
            trail.add("search", "unit graph completion",
                      f"profile {_fmt(p, unit)}: {len(res.completions)} simple completions of H "
                      f"with one triangle and no K_2,3 ({res.log_text()})")
            if res.completions:
                blocked.add("search")
        else:
            blocked.add("unhandled")
            trail.add("profiles", "none", f"profile {_fmt(p, unit)} left open")
    trail.blocked_by = sorted(blocked)
    trail.verdict = "open" if blocked else "infeasible"
    return trail


def _fmt(p, unit: bool) -> str:
    e1, rest = p
    body = "+".join(map(str, rest))
    return f"[{e1}|{body}]" if unit else f"[{body}]"


def zero_divisor_infeasible(n: int, disabled=(), reading: str = DYKEMA_AS_APPLIED) -> ContradictionTrail:
    if not 3 <= n <= 9:
        raise ValueError("n must be in 3..9")
    return _settle(n, False, frozenset(disabled), reading)


def unit_infeasible(n: int, disabled=(), reading: str = DYKEMA_AS_APPLIED) -> ContradictionTrail:
    if not 3 <= n <= 8:
        raise ValueError("n must be in 3..8")
    return _settle(n, True, frozenset(disabled), reading)


# -- unit graph completion on 8 vertices ---------------------------------------

# vertices g1..g8 are 0..7; g1, g3, g4 form the only triangle
SEED_H = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 4), (3, 5), (2, 6), (2, 7))
TARGET_DEGREES = (3, 3, 4, 4, 3, 3, 3, 3)


@dataclass
class CompletionResult:
    completions: list
    log: dict  # branch -> counters

    def log_text(self) -> str:
        parts = []
        for b, c in self.log.items():
            parts.append(f"{b}: " + ", ".join(f"{k} {v}" for k, v in c.items()))
        return "; ".join(parts)


def _triangles(g: nx.Graph) -> int:
    return sum(nx.triangles(g).values()) // 3


def _has_k23(g: nx.Graph) -> bool:
    # two vertices with three common neighbours
    for u, v in itertools.combinations(g.nodes, 2):
        if len(set(g[u]) & set(g[v])) >= 3:
            return True
    return False


def search_unit_order8(ban_k23: bool = True, seed=SEED_H, degrees=TARGET_DEGREES) -> CompletionResult:
    """All simple graphs on 8 vertices extending ``seed`` with the target degrees,
    exactly one triangle and (optionally) no K_2,3."""
    n = len(degrees)
    base = nx.Graph()
    base.add_nodes_from(range(n))
    base.add_edges_from(seed)
    deficit = [degrees[v] - base.degree(v) for v in range(n)]
    if min(deficit) < 0:
        raise ValueError("seed exceeds the target degrees")
    free = [(u, v) for u, v in itertools.combinations(range(n), 2) if not base.has_edge(u, v)]
    need = sum(deficit) // 2
    log: dict = {}
    found = []
    for extra in itertools.combinations(free, need):
        d = list(deficit)
        for u, v in extra:
            d[u] -= 1
            d[v] -= 1
        if any(d):
            continue
        branch = "g5~g2" if (1, 4) in extra else "g5!~g2"
        c = log.setdefault(branch, {"degree-feasible": 0, "extra triangle": 0, "K_2,3": 0, "completions": 0})
        c["degree-feasible"] += 1
        g = base.copy()
        g.add_edges_from(extra)
        if _triangles(g) != 1:
            c["extra triangle"] += 1
            continue
        if ban_k23 and _has_k23(g):
            c["K_2,3"] += 1
            continue
        c["completions"] += 1
        found.append(tuple(sorted(g.edges)))
    for b in ("g5~g2", "g5!~g2"):
        log.setdefault(b, {"degree-feasible": 0, "extra triangle": 0, "K_2,3": 0, "completions": 0})
    return CompletionResult(found, dict(sorted(log.items())))


def seed_is_consistent(seed=SEED_H, degrees=TARGET_DEGREES) -> bool:
    g = nx.Graph(seed)
    return (_triangles(g) == 1 and not _has_k23(g)
            and all(g.degree(v) <= degrees[v] for v in g.nodes))


def all_trails(disabled=(), reading: str = DYKEMA_AS_APPLIED) -> list[ContradictionTrail]:
    return ([zero_divisor_infeasible(n, disabled, reading) for n in range(3, 10)]
            + [unit_infeasible(n, disabled, reading) for n in range(3, 9)])


def trails_json(trails) -> str:
    return json.dumps([t.to_json() for t in trails], indent=2)
