import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kapsupp.algebra import (
    UNIT, ZERO_DIVISOR, GroupAlgebraElement, build_support_graph, cyclic_group, example_pairs,
    multiply, structural_checks, translate,
)


def cyclic_product(a, b, n, p):
    """Product in F_p[C_n] as a cyclic convolution of coefficient vectors."""
    full = np.convolve(a, b)
    out = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(full):
        out[i % n] += c
    return out % p


def vector(e: GroupAlgebraElement, n):
    v = np.zeros(n, dtype=np.int64)
    for g, c in e.coeffs:
        v[g] = c
    return v


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.sampled_from([2, 3, 5]), st.data())
def test_multiply_matches_convolution(n, p, data):
    grp = cyclic_group(n)
    coeffs = st.lists(st.integers(0, p - 1), min_size=n, max_size=n)
    ca, cb = data.draw(coeffs), data.draw(coeffs)
    a = GroupAlgebraElement.from_dict(grp, p, dict(enumerate(ca)))
    b = GroupAlgebraElement.from_dict(grp, p, dict(enumerate(cb)))
    assert list(vector(multiply(a, b), n)) == list(cyclic_product(ca, cb, n, p))


# edge multiplicities of the worked examples, as unordered vertex pairs of exponents
FIGURES = {
    "Z(1+x^2+x^3+x^4, 1+x+x^5)": {(0, 1): 2, (0, 5): 2, (1, 5): 2},
    "Z(1+x+x^5, 1+x^2+x^3+x^4)": {(0, 2): 1, (0, 3): 1, (0, 4): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1},
    "U(-1+x-x^2, 1+x)": {(0, 1): 3},
    "U(1+x, -1+x-x^2)": {(0, 1): 1, (0, 2): 1, (1, 2): 1},
    "U(-1-x+x^3+2x^4+x^5-x^7, -1+x-x^3+2x^4-x^5+x^7)": {
        **{e: 4 for e in itertools.combinations((0, 1, 3, 4, 5, 7), 2)},
        (0, 4): 6, (1, 5): 6, (3, 7): 6,
    },
}


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_worked_example_multiplicities(name):
    a, b, kind = example_pairs()[name]
    g = build_support_graph(a, b, kind)
    got = {tuple(sorted(e)): c for e, c in g.multiplicities().items()}
    assert got == FIGURES[name]
    assert sorted(g.vertices) == sorted({v for e in FIGURES[name] for v in e})
    prod = multiply(a, b)
    assert prod.is_zero() if kind == ZERO_DIVISOR else prod.is_one()


def brute_edges(a, b):
    """Unordered coincidences h g = h' g' with h != h' and g != g'."""
    grp = a.group
    out = set()
    for (h, g), (h2, g2) in itertools.combinations(itertools.product(a.support, b.support), 2):
        if h != h2 and g != g2 and grp.mul(h, g) == grp.mul(h2, g2):
            out.add(frozenset([(h, g), (h2, g2)]))
    return out


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_edges_are_coincidences(name):
    a, b, kind = example_pairs()[name]
    g = build_support_graph(a, b, kind)
    assert len(g.edges) == len(brute_edges(a, b))


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_translation_isomorphism_every_shift(name):
    a, b, kind = example_pairs()[name]
    grp = a.group
    for x in range(grp.order):
        ys = [grp.inv(x)] if kind == UNIT else range(grp.order)
        for y in ys:
            t = translate(a, b, x, y, kind)
            assert t.certified(), (x, y)


def test_unit_translation_needs_inverse():
    a, b, kind = example_pairs()["U(-1+x-x^2, 1+x)"]
    with pytest.raises(ValueError):
        translate(a, b, 1, 1, kind)


def test_structural_checks_only_where_licensed():
    a, b, kind = example_pairs()["Z(1+x^2+x^3+x^4, 1+x+x^5)"]
    g = build_support_graph(a, b, kind)
    # over a finite group nothing is required, so nothing is violated
    rep = structural_checks(g, field_is_F2=True, alpha_support_size=4)
    assert rep.violations() == []
    assert rep.simple is False and rep.connected is True
    # pretending the context is torsion-free flags the multi-edges
    rep = structural_checks(g, alpha_support_size=3, torsion_free=True)
    assert rep.violations() == ["simple"]


def test_support_graph_rejects_bad_pairs():
    c3 = cyclic_group(3)
    a = GroupAlgebraElement.parse("1+x", c3, 2)
    with pytest.raises(ValueError):
        build_support_graph(a, a, ZERO_DIVISOR)
    with pytest.raises(ValueError):
        build_support_graph(a, a, UNIT)


def test_parse_and_print_round_trip():
    c8 = cyclic_group(8)
    e = GroupAlgebraElement.parse("-1-x+x^3+2*x^4+x^5-x^7", c8, 3)
    assert GroupAlgebraElement.parse(str(e), c8, 3).coeffs == e.coeffs
    assert e.support == (0, 1, 3, 4, 5, 7)
