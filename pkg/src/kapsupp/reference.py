"""Reference relation lists used by the classifier, the CLI and the tests.

``SQUARE_RELATIONS`` lists the 36 inequivalent relations forced by a labelled
4-cycle, in the conventional row order, with the elimination route recorded
for each row (``A`` abelian, ``T`` torsion, ``BS(m,n)`` Baumslag-Solitar
quotient, ``*`` no contradiction).
"""

from __future__ import annotations

from .words import Word, parse, swap_generators

SQUARE_RELATIONS: list[tuple[int, str, str]] = [
    (1, "h2^4", "T"),
    (2, "h2^3*h3", "A"),
    (3, "h2^3*h3^-1*h2", "A"),
    (4, "h2^2*h3^2", "BS(1,-1)"),
    (5, "h2^2*h3*h2^-1*h3", "*"),
    (6, "h2^2*h3^-1*h2^-1*h3", "BS(1,2)"),
    (7, "h2^2*h3^-2*h2", "*"),
    (8, "h2^2*h3^-1*h2*h3", "BS(1,-2)"),
    (9, "h2*(h2*h3^-1)^2*h2", "BS(1,-1)"),
    (10, "(h2*h3)^2", "A"),
    (11, "h2*h3*h2*h3^-1*h2", "BS(-2,1)"),
    (12, "h2*h3^3", "A"),
    (13, "h2*h3^2*h2^-1*h3", "BS(1,-2)"),
    (14, "h2*h3*h2^-2*h3", "*"),
    (15, "h2*h3*h2^-1*h3^-1*h2", "BS(2,1)"),
    (16, "h2*h3*h2^-1*h3^2", "BS(-2,1)"),
    (17, "h2*(h3*h2^-1)^2*h3", "*"),
    (18, "h2*h3^-1*h2^-1*h3^2", "BS(2,1)"),
    (19, "h2*h3^-1*(h2^-1*h3)^2", "BS(2,1)"),
    (20, "h2*h3^-2*h2^-1*h3", "BS(1,2)"),
    (21, "h2*h3^-3*h2", "*"),
    (22, "h2*h3^-2*h2*h3", "*"),
    (23, "h2*h3^-1*(h3^-1*h2)^2", "BS(-2,1)"),
    (24, "(h2*h3^-1*h2)^2", "A"),
    (25, "h2*h3^-1*h2*h3^2", "*"),
    (26, "h2*h3^-1*h2*h3*h2^-1*h3", "*"),
    (27, "(h2*h3^-1)^2*h2^-1*h3", "BS(2,1)"),
    (28, "(h2*h3^-1)^2*h3^-1*h2", "BS(1,-2)"),
    (29, "(h2*h3^-1)^2*h2*h3", "*"),
    (30, "(h2*h3^-1)^3*h2", "A"),
    (31, "h3^4", "T"),
    (32, "h3^3*h2^-1*h3", "A"),
    (33, "h3*(h3*h2^-1)^2*h3", "BS(1,-1)"),
    (34, "(h3*h2^-1*h3)^2", "A"),
    (35, "(h3*h2^-1)^3*h3", "A"),
    (36, "(h2^-1*h3)^4", "A"),
]

SQUARE_SURVIVORS = (5, 7, 14, 17, 21, 22, 25, 26, 29)

# the 13 relations forced by a triangle whose three edges carry distinct label pairs
TRIANGLE_RELATIONS: list[str] = [
    "h2^3",
    "h2^2*h3",
    "h2^2*h3^-1*h2",
    "h2*h3^2",
    "h2*h3*h2^-1*h3",
    "h2*h3^-1*h2^-1*h3",
    "h2*h3^-2*h2",
    "h2*h3^-1*h2*h3",
    "(h2*h3^-1)^2*h2",
    "h3^3",
    "h3^2*h2^-1*h3",
    "(h3*h2^-1)^2*h3",
    "(h2^-1*h3)^3",
]


def square_relation(row: int) -> Word:
    return parse(SQUARE_RELATIONS[row - 1][1])


# substitutions x, y with x^2 = y^3 for each surviving square relation;
# form "xy" means the support {1, x, y}, "yx" means {1, y, y^-1 x}
_WITNESS_BASE = {
    5: ("h2^-1*h3", "h2^-1", "xy"),
    7: ("h3", "h2", "xy"),
    14: ("h2*h3", "h2", "yx"),
    17: ("h2^-1", "h3*h2^-1", "xy"),
    26: ("h2*h3^-1*h2", "h3^-1*h2", "yx"),
}
# rows obtained from the ones above by exchanging h2 and h3
_SWAPPED = {21: 7, 22: 14, 25: 5, 29: 17}


def witness_substitution(row: int) -> tuple[Word, Word, str]:
    if row in _WITNESS_BASE:
        x, y, form = _WITNESS_BASE[row]
        return parse(x), parse(y), form
    if row in _SWAPPED:
        x, y, form = witness_substitution(_SWAPPED[row])
        return swap_generators(x), swap_generators(y), form
    raise ValueError(f"row {row} is not a surviving square relation")


# forbidden-configuration filter: graphs removed by each row, for n = 4, 6, ..., 20
CENSUS_SIZES = (4, 6, 8, 10, 12, 14, 16, 18, 20)
CENSUS_TOTALS = (0, 1, 2, 6, 22, 110, 792, 7805, 97546)
FILTER_COUNTS = (
    ('K_{2,3}', (0, 1, 0, 1, 4, 22, 144, 1222, 12991)),
    ('C4--C5', (0, 0, 1, 2, 6, 30, 223, 2161, 25427)),
    ('C4--C6', (0, 0, 1, 1, 6, 31, 223, 2228, 28080)),
    ('C4-C5(-C5-)', (0, 0, 0, 0, 2, 6, 40, 319, 3396)),
    ('C4-C5(-C4-)', (0, 0, 0, 1, 0, 3, 12, 88, 1123)),
    ('C4-C5(-C6--)', (0, 0, 0, 0, 0, 4, 42, 389, 4548)),
    ('C4-C5(-C6-)', (0, 0, 0, 0, 0, 1, 20, 382, 5661)),
    ('C4-C5(-C7--)', (0, 0, 0, 0, 0, 1, 10, 176, 3172)),
    ('C5--C5(--C5)', (0, 0, 0, 1, 2, 3, 18, 157, 1617)),
    ('C5--C5(--C6)', (0, 0, 0, 0, 0, 4, 32, 291, 4289)),
    ('C4-C6(--C7--)(C7-1)', (0, 0, 0, 0, 1, 0, 9, 64, 446)),
    ('C4-C6(--C7--)(--C5-)', (0, 0, 0, 0, 0, 0, 0, 2, 51)),
    ('C4-C6(-C6--)(-C4-)', (0, 0, 0, 0, 1, 0, 1, 5, 35)),
    ('C4-C6(-C6--)(--C5-)', (0, 0, 0, 0, 0, 0, 1, 1, 149)),
    ('C4-C6(-C6--)(C6---)', (0, 0, 0, 0, 0, 0, 1, 30, 404)),
    ('C4-C6(-C6--)(---C4)', (0, 0, 0, 0, 0, 0, 1, 4, 12)),
    ('C5-C5(--C6--)', (0, 0, 0, 0, 0, 2, 0, 41, 352)),
    ('C5-C5(-C6--)(C6---)', (0, 0, 0, 0, 0, 0, 7, 47, 529)),
    ('C5-C5(-C6--)(--C6-1)', (0, 0, 0, 0, 0, 0, 1, 31, 249)),
    ('C5-C5(-C6--)(-C5--)', (0, 0, 0, 0, 0, 0, 1, 1, 69)),
    ('C6---C6(C6---C6)', (0, 0, 0, 0, 0, 1, 1, 8, 43)),
    ('C6---C6(C6)(C6)(C6)', (0, 0, 0, 0, 0, 0, 2, 6, 25)),
    ('C5(--C6--)C5(---C6)', (0, 0, 0, 0, 0, 0, 1, 16, 374)),
    ('C6--C6(C6--C6)', (0, 0, 0, 0, 0, 0, 0, 29, 438)),
    ('C6---C6(C6--C6)', (0, 0, 0, 0, 0, 0, 0, 20, 505)),
    ('C6---C6(-C5-)', (0, 0, 0, 0, 0, 0, 0, 27, 721)),
    ('C4-C6(--C7--)(---C6)', (0, 0, 0, 0, 0, 0, 0, 8, 257)),
    ('C4-C6(--C7--)(C4)(C4)', (0, 0, 0, 0, 0, 0, 0, 2, 2)),
    ('C6---C6(-C5--)', (0, 0, 0, 0, 0, 0, 0, 5, 66)),
    ('C6--C6(--C5-)(-C5-)', (0, 0, 0, 0, 0, 0, 0, 12, 293)),
    ('C6--C6(--C5-)(C6---)', (0, 0, 0, 0, 0, 0, 0, 2, 267)),
    ('C5(--C6--)C5(C6)', (0, 0, 0, 0, 0, 0, 0, 1, 43)),
    ('C5(--C6--)C5(C7)', (0, 0, 0, 0, 0, 0, 0, 2, 50)),
    ('C5-C5(--C7--)(--C5)', (0, 0, 0, 0, 0, 0, 0, 6, 199)),
    ('C5-C5(--C7--)(-C5-)', (0, 0, 0, 0, 0, 0, 0, 2, 69)),
    ('C5-C5(-C6--)(--C6-2)', (0, 0, 0, 0, 0, 0, 0, 2, 114)),
    ('C4-C4(-C7-)(C4)', (0, 0, 0, 0, 0, 1, 0, 6, 72)),
    ('C5--C5(-C5--)', (0, 0, 0, 0, 0, 0, 0, 1, 11)),
    ('C6---C6(-C4)', (0, 0, 0, 0, 0, 0, 0, 3, 94)),
    ('C6--C6(C4)', (0, 0, 0, 0, 0, 0, 0, 2, 67)),
    ('C4-C6(-C4)(-C4)', (0, 0, 0, 0, 0, 0, 0, 1, 30)),
    ('C4-C6(--C7--)(-C5-)', (0, 0, 0, 0, 0, 0, 0, 1, 26)),
    ('C5-C5(-C6--)(--C5-)', (0, 0, 0, 0, 0, 0, 0, 1, 17)),
    ('C4-C6(--C7--)(C7-2)', (0, 0, 0, 0, 0, 0, 0, 1, 41)),
)
LADDER_PRISM_COUNTS = (0, 0, 0, 0, 0, 0, 1, 1, 1)
LADDER_MOEBIUS_COUNTS = (0, 0, 0, 0, 0, 1, 1, 1, 1)
REMAINS_COUNTS = (0, 0, 0, 0, 0, 0, 0, 0, 1120)

FINITE_AND_SOLVABLE = "finite_and_solvable"
FINITE_OR_SOLVABLE = "finite_or_solvable"
VACUOUS = "vacuous"

# published case counts per configuration: (total, eliminated, surviving, how cases were eliminated);
# totals are stated independently and need not equal eliminated + surviving
CASE_COUNTS = {
    "C3": (13, 13, 0, FINITE_OR_SOLVABLE),
    "K_{2,3}": (None, None, 0, FINITE_AND_SOLVABLE),
    'C4--C5': (121, 111, 10, FINITE_AND_SOLVABLE),
    'C4--C6': (658, 632, 20, FINITE_OR_SOLVABLE),
    'C4-C5(-C5-)': (42, 38, 4, FINITE_AND_SOLVABLE),
    'C4-C5(-C4-)': (4, 4, 0, FINITE_AND_SOLVABLE),
    'C4-C5(-C6--)': (126, 122, 4, FINITE_AND_SOLVABLE),
    'C4-C5(-C6-)': (462, 436, 22, FINITE_OR_SOLVABLE),
    'C4-C5(-C7--)': (648, 608, 40, FINITE_AND_SOLVABLE),
    'C5--C5(--C5)': (192, 188, 4, FINITE_AND_SOLVABLE),
    'C5--C5(--C6)': (1006, 986, 20, FINITE_AND_SOLVABLE),
    'C4-C6(--C7--)(C7-1)': (176, 176, 0, FINITE_AND_SOLVABLE),
    'C4-C6(--C7--)(--C5-)': (28, 24, 4, FINITE_AND_SOLVABLE),
    'C4-C6(-C6--)(-C4-)': (0, 0, 0, VACUOUS),
    'C4-C6(-C6--)(--C5-)': (22, 22, 0, FINITE_AND_SOLVABLE),
    'C4-C6(-C6--)(C6---)': (66, 62, 4, FINITE_AND_SOLVABLE),
    'C4-C6(-C6--)(---C4)': (0, 0, 0, VACUOUS),
    'C5-C5(--C6--)': (440, 404, 36, FINITE_AND_SOLVABLE),
    'C5-C5(-C6--)(C6---)': (56, 54, 2, FINITE_OR_SOLVABLE),
    'C5-C5(-C6--)(--C6-1)': (56, 56, 0, FINITE_AND_SOLVABLE),
    'C5-C5(-C6--)(-C5--)': (14, 14, 0, FINITE_AND_SOLVABLE),
    'C6---C6(C6---C6)': (46, 30, 16, FINITE_OR_SOLVABLE),
    'C6---C6(C6)(C6)(C6)': (10, 6, 4, FINITE_OR_SOLVABLE),
    'C5(--C6--)C5(---C6)': (134, 130, 4, FINITE_OR_SOLVABLE),
    'C6--C6(C6--C6)': (5119, 4983, 136, FINITE_OR_SOLVABLE),
    'C6---C6(C6--C6)': (1594, 1446, 148, FINITE_OR_SOLVABLE),
    'C6---C6(-C5-)': (1482, 1358, 124, FINITE_AND_SOLVABLE),
    'C4-C6(--C7--)(---C6)': (124, 112, 12, FINITE_AND_SOLVABLE),
    'C4-C6(--C7--)(C4)(C4)': (8, 8, 0, FINITE_AND_SOLVABLE),
    'C6---C6(-C5--)': (418, 358, 60, FINITE_AND_SOLVABLE),
    'C6--C6(--C5-)(-C5-)': (62, 56, 6, FINITE_OR_SOLVABLE),
    'C6--C6(--C5-)(C6---)': (76, 64, 12, FINITE_OR_SOLVABLE),
    'C5(--C6--)C5(C6)': (120, 104, 16, FINITE_OR_SOLVABLE),
    'C5(--C6--)C5(C7)': (248, 220, 28, FINITE_OR_SOLVABLE),
    'C5-C5(--C7--)(--C5)': (394, 352, 42, FINITE_OR_SOLVABLE),
    'C5-C5(--C7--)(-C5-)': (138, 132, 6, FINITE_OR_SOLVABLE),
    'C5-C5(-C6--)(--C6-2)': (22, 22, 0, FINITE_AND_SOLVABLE),
    'C4-C4(-C7-)(C4)': (32, 32, 0, FINITE_AND_SOLVABLE),
    'C5--C5(-C5--)': (64, 58, 6, FINITE_AND_SOLVABLE),
    'C6---C6(-C4)': (420, 398, 22, FINITE_OR_SOLVABLE),
    'C6--C6(C4)': (279, 268, 11, FINITE_OR_SOLVABLE),
    'C4-C6(-C4)(-C4)': (36, 36, 0, FINITE_OR_SOLVABLE),
    'C4-C6(--C7--)(-C5-)': (62, 58, 4, FINITE_OR_SOLVABLE),
    'C5-C5(-C6--)(--C5-)': (14, 14, 0, FINITE_OR_SOLVABLE),
    'C4-C6(--C7--)(C7-2)': (168, 152, 16, FINITE_OR_SOLVABLE),
}
