"""Freely reduced words over the alphabet h2, h3 and their inverses.

A letter is stored as a signed int: ``2``, ``-2``, ``3``, ``-3``.  Words are
immutable and always kept freely reduced.

Text syntax: ``h2^2*h3^-2*h2``; the identity prints as ``1``.  The parser also
accepts juxtaposition (``h2h3``) and parenthesised powers (``(h2*h3^-1)^2``).
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple

GENERATORS = (2, 3)


class Letter(NamedTuple):
    generator: int
    sign: int

    def code(self) -> int:
        return self.sign * self.generator


def _check(code: int) -> int:
    if code not in (2, -2, 3, -3):
        raise ValueError(f"not a letter: {code!r}")
    return code


def _as_code(x) -> int:
    if isinstance(x, Letter):
        if x.generator not in GENERATORS or x.sign not in (1, -1):
            raise ValueError(f"bad letter {x!r}")
        return x.code()
    return _check(int(x))


class Word:
    """A freely reduced word.  Construct with :func:`reduce` or :func:`parse`."""

    __slots__ = ("codes", "_hash")

    def __init__(self, codes: Iterable = ()):
        out: list[int] = []
        for x in codes:
            c = _as_code(x)
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
        self.codes = tuple(out)
        self._hash = hash(self.codes)

    @classmethod
    def _trusted(cls, codes: tuple) -> "Word":
        w = cls.__new__(cls)
        w.codes = codes
        w._hash = hash(codes)
        return w

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(abs(c), 1 if c > 0 else -1) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __eq__(self, other):
        return isinstance(other, Word) and self.codes == other.codes

    def __lt__(self, other):
        return (len(self), self.codes) < (len(other), other.codes)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        return Word(base.codes * abs(k))

    def __invert__(self) -> "Word":
        return invert(self)

    def is_identity(self) -> bool:
        return not self.codes

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"


IDENTITY = Word(())
H2 = Word((2,))
H3 = Word((3,))


def reduce(raw: Iterable) -> Word:
    """Free reduction of a sequence of letters (``Letter`` or signed ints)."""
    return Word(raw)


def invert(w: Word) -> Word:
    return Word._trusted(tuple(-c for c in reversed(w.codes)))


def concat(u: Word, v: Word) -> Word:
    a, b = u.codes, v.codes
    i = 0
    while i < len(a) and i < len(b) and a[-1 - i] == -b[i]:
        i += 1
    return Word._trusted(a[: len(a) - i] + b[i:])


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) < 2 or w.codes[0] != -w.codes[-1]


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``conj * core * conj^-1`` with ``core`` cyclically reduced."""
    c = w.codes
    i, j = 0, len(c) - 1
    while i < j and c[i] == -c[j]:
        i += 1
        j -= 1
    return Word._trusted(c[:i]), Word._trusted(c[i : j + 1])


def power_root(w: Word) -> tuple[Word, int]:
    """Return ``(root, k)`` with ``w == root**k`` and ``k`` maximal."""
    if not w.codes:
        raise ValueError("power_root of the identity")
    if not is_cyclically_reduced(w):
        raise ValueError(f"{w} is not cyclically reduced")
    c = w.codes
    n = len(c)
    for d in range(1, n + 1):
        if n % d == 0 and c[:d] * (n // d) == c:
            return Word._trusted(c[:d]), n // d
    raise AssertionError("unreachable")


def exponent_sums(w: Word) -> tuple[int, int]:
    e2 = sum(1 if c == 2 else -1 for c in w.codes if abs(c) == 2)
    e3 = sum(1 if c == 3 else -1 for c in w.codes if abs(c) == 3)
    return e2, e3


def cyclic_permutations(w: Word) -> list[Word]:
    c = w.codes
    return [Word._trusted(c[i:] + c[:i]) for i in range(len(c))] or [w]


def cyclic_class(w: Word) -> frozenset:
    """All cyclic permutations of the core of ``w`` and of its inverse."""
    core = cyclic_reduce(w)[1]
    return frozenset(cyclic_permutations(core) + cyclic_permutations(invert(core)))


def canonical_relator(w: Word) -> Word:
    """Least representative of the cyclic class of ``w``."""
    return min(cyclic_class(w))


def same_relator(u: Word, v: Word) -> bool:
    """Equality up to conjugacy and inversion."""
    return canonical_relator(u) == canonical_relator(v)


def swap_generators(w: Word) -> Word:
    """Apply the automorphism h2 <-> h3."""
    return Word._trusted(tuple((5 - abs(c)) * (1 if c > 0 else -1) for c in w.codes))


# -- text syntax -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(h[23])|(\()|(\))|(\^)|(-?\d+)|(\*))")


def _tokens(text: str):
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        pos = m.end()
        kinds = ("gen", "(", ")", "^", "int", "*")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                yield kind, val
                break


def parse(text: str) -> Word:
    """Parse the textual word syntax (see module docstring)."""
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def product() -> Word:
        nonlocal pos
        out = IDENTITY
        while True:
            k = peek()
            if k == "*":
                pos += 1
                continue
            if k not in ("gen", "(") and not (k == "int" and toks[pos][1] == "1"):
                return out
            out = concat(out, factor())

    def factor() -> Word:
        nonlocal pos
        kind, val = toks[pos]
        pos += 1
        if kind == "gen":
            base = Word((int(val[1]),))
        elif kind == "int":
            base = IDENTITY
        else:
            base = product()
            if peek() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
        if peek() == "^":
            pos += 1
            if peek() != "int":
                raise ValueError(f"missing exponent in {text!r}")
            base = base ** int(toks[pos][1])
            pos += 1
        return base

    w = product()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return w


def format_word(w: Word) -> str:
    if not w.codes:
        return "1"
    parts = []
    c = w.codes
    i = 0
    while i < len(c):
        j = i
        while j < len(c) and c[j] == c[i]:
            j += 1
        k = (j - i) * (1 if c[i] > 0 else -1)
        g = f"h{abs(c[i])}"
        parts.append(g if k == 1 else f"{g}^{k}")
        i = j
    return "*".join(parts)


def all_words(max_len: int) -> list[Word]:
    """Every reduced word of length 1..max_len, shortest first."""
    out: list[Word] = []
    layer = [IDENTITY]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for c in (2, -2, 3, -3):
                if w.codes and w.codes[-1] == -c:
                    continue
                nxt.append(Word._trusted(w.codes + (c,)))
        out.extend(nxt)
        layer = nxt
    return out
