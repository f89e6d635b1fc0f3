"""Regression values recorded from hand-checked runs."""

from fractions import Fraction as F

from lperm.constructions import lemma31_witnesses
from lperm.ef import ef_equiv
from lperm.evaluator import SearchBudget, enumerate_elements
from lperm.formula import parse, print_formula, relativize
from lperm.pl import PLMap, pl_interpolate
from lperm.wreath import wreath

LEMMA_F = ((F(-71, 81), F(-71, 81)), (F(1, 2), F(10, 81)), (F(9, 16), F(4, 27)), (F(11, 16), F(2, 9)),
           (F(3, 4), F(7, 3)), (F(25, 32), F(5, 2)), (F(13, 16), F(139, 48)), (F(27, 32), F(35, 12)),
           (F(47, 12), F(47, 12)))
LEMMA_K = ((F(-7, 12), F(-7, 12)), (F(5, 12), F(5, 2)), (F(1, 2), F(11, 4)), (F(5, 2), F(23, 8)),
           (F(11, 4), F(139, 48)), (F(47, 16), F(71, 24)), (F(95, 24), F(95, 24)))

ZZ_STREAM = [
    {"overrides": [], "defaults": [0, 0]},
    {"overrides": [[[], 1]], "defaults": [0, 0]},
    {"overrides": [[[], -1]], "defaults": [0, 0]},
    {"overrides": [[[0], 1]], "defaults": [0, 0]},
    {"overrides": [[[0], -1]], "defaults": [0, 0]},
    {"overrides": [[[], 1], [[-1], 1]], "defaults": [0, 0]},
    {"overrides": [[[], 1], [[-1], -1]], "defaults": [0, 0]},
    {"overrides": [[[], -1], [[1], 1]], "defaults": [0, 0]},
]


def test_lemma31_canonical_instance():
    h = PLMap.bump(0, F(1, 2), F(3, 4), 1)
    inst = lemma31_witnesses(h, pl_interpolate([0, 1], [2, 3]))
    assert inst.f.breakpoints == LEMMA_F
    assert inst.k.breakpoints == LEMMA_K
    # lambda = 35/12 lands on gamma = 5/2 one way and on gamma h^-g = 7/3 the other
    assert (inst.check_point, inst.lhs, inst.rhs) == (F(35, 12), F(5, 2), F(7, 3))


def test_enumeration_stream_prefix():
    got = [e.to_json() for e in enumerate_elements(wreath(["Z", "Z"]), SearchBudget(max_elements=8))]
    assert got == ZZ_STREAM


def test_relativized_text():
    rel = relativize(parse("A f,g. [f,g] = 1"), "h")
    assert print_formula(rel) == "A f,g. gamma(h, f) & gamma(h, g) -> (E h'. vartheta(h', h) & gamma(h', [f, g]))"


def test_ef_rank_two_table():
    table = [[int(ef_equiv(m, n, 2)) for n in range(5)] for m in range(5)]
    assert table == [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 1, 1],
    ]
