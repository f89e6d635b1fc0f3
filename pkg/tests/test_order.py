from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.order import (
    Interval,
    IntervalSet,
    ShapeError,
    interval_set_algebra,
    lex_compare,
    rat,
    rat_to_str,
)

from conftest import rationals


def test_lex_compare_frozen():
    assert lex_compare((0, 0), (0, 1)) == -1
    assert lex_compare((1, 0), (0, 5)) == 1
    assert lex_compare((2, 3), (2, 3)) == 0


def test_lex_compare_arity():
    with pytest.raises(ShapeError):
        lex_compare((0,), (0, 1))


def test_gap_at_shared_endpoint():
    s = IntervalSet([Interval.open(0, 1)]).union(IntervalSet([Interval.open(1, 2)]))
    assert len(s) == 2
    assert 1 not in s


def test_complement_of_empty():
    assert IntervalSet().complement() == IntervalSet.everything()


def test_member():
    assert interval_set_algebra("member", IntervalSet([Interval.open(0, 1)]), Fraction(1, 2))


def test_rat_roundtrip():
    assert rat("3/4") == Fraction(3, 4)
    assert rat(rat_to_str(Fraction(-7, 3))) == Fraction(-7, 3)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval.open(1, 1)


intervals = st.tuples(rationals, rationals).filter(lambda t: t[0] < t[1]).map(lambda t: Interval.open(*t))
interval_sets = st.lists(intervals, max_size=4).map(IntervalSet)


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_lex_is_a_total_order(p, q):
    assert lex_compare(p, q) == -lex_compare(q, p)
    assert (lex_compare(p, q) == 0) == (p == q)


@given(interval_sets, interval_sets, rationals)
def test_set_algebra_matches_membership(a, b, x):
    assert (x in a.union(b)) == (x in a or x in b)
    assert (x in a.intersect(b)) == (x in a and x in b)
    assert (x in a.complement()) == (x not in a)


@given(interval_sets)
def test_components_disjoint_and_sorted(a):
    comps = list(a)
    for u, v in zip(comps, comps[1:]):
        assert u.upper <= v.lower
    assert a.complement().complement() == a
