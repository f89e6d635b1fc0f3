from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.pl import (
    PLMap,
    PLQGroup,
    PreconditionError,
    pl_algebra,
    pl_apply,
    pl_interpolate,
    pl_is_irreducible,
    pl_restrict,
    pl_support,
)

from conftest import bumps, pl_maps, rationals

G_UP = PLMap([(0, 0), (1, 2), (4, 4)])


def test_frozen_apply():
    assert pl_apply(PLMap(), Fraction(7, 3)) == Fraction(7, 3)
    assert pl_apply(G_UP, Fraction(1, 2)) == 1


def test_frozen_algebra():
    assert pl_algebra("mul", G_UP, pl_algebra("inv", G_UP)).is_identity()
    assert pl_algebra("join", G_UP, PLMap()) == G_UP


def test_frozen_support():
    assert pl_support(PLMap()) == (pl_support(PLMap())[0], [])
    supp, bs = pl_support(G_UP)
    assert [(b.carrier.lower, b.carrier.upper, b.direction) for b in bs] == [(0, 4, "up")]
    h = PLMap.bump(0, Fraction(1, 2), Fraction(3, 4), 1) * PLMap.bump(2, Fraction(5, 2), Fraction(9, 4), 3)
    assert [b.direction for b in pl_support(h)[1]] == ["up", "down"]


def test_crossing_join_on_grid():
    f = PLMap.bump(0, 1, 3, 4)
    g = PLMap.bump(0, 3, Fraction(7, 2), 4)
    j = f.join(g)
    for i in range(100):
        x = Fraction(i, 25) - Fraction(1, 2)
        assert j.apply(x) == max(f.apply(x), g.apply(x))


def test_interpolate_frozen():
    assert pl_interpolate([1, 2], [1, 2]).is_identity()
    f = pl_interpolate([0, 1], [0, 2])
    assert f.apply(0) == 0 and f.apply(1) == 2 and f.carrier is not None
    with pytest.raises(PreconditionError):
        pl_interpolate([1, 0], [0, 1])
    with pytest.raises(PreconditionError):
        pl_interpolate([0, 1], [0])


def test_irreducible_frozen():
    assert pl_is_irreducible(G_UP)
    assert not pl_is_irreducible(PLMap())
    two = PLMap.bump(0, 1, 2, 3) * PLMap.bump(5, 6, 7, 8)
    ok, (g1, g2) = pl_is_irreducible(two, with_witness=True)
    assert not ok
    assert g1.join(g2) == two and g1.meet(g2).is_identity()


def test_restrict_needs_invariant_interval():
    with pytest.raises(PreconditionError):
        pl_restrict(G_UP, 1, 2)


def test_group_wrapper():
    G = PLQGroup()
    assert G.mul(G_UP, G.inv(G_UP)) == G.identity()
    assert G.to_json() == {"family": "plq"}


@given(pl_maps(), rationals, rationals)
def test_strictly_increasing(f, x, y):
    if x < y:
        assert f.apply(x) < f.apply(y)


@given(pl_maps(), pl_maps(), rationals)
def test_right_action(f, g, x):
    assert (f * g).apply(x) == g.apply(f.apply(x))
    assert f.inverse().apply(f.apply(x)) == x


@given(pl_maps(), pl_maps(), pl_maps(), pl_maps())
def test_multiplication_distributes_over_lattice(f, g, h, k):
    assert h * f.join(g) * k == (h * f * k).join(h * g * k)
    assert h * f.meet(g) * k == (h * f * k).meet(h * g * k)


@given(pl_maps(), rationals)
def test_abs_contract(g, x):
    a = g.join(g.inverse())
    assert a.apply(x) >= x
    assert a.is_identity() == g.is_identity()
    assert a == g.abs()


@given(pl_maps(), pl_maps(), rationals)
def test_join_meet_pointwise(f, g, x):
    assert f.join(g).apply(x) == max(f.apply(x), g.apply(x))
    assert f.meet(g).apply(x) == min(f.apply(x), g.apply(x))


@given(pl_maps())
def test_json_roundtrip(f):
    assert PLMap.from_json(f.to_json()) == f


@given(st.lists(rationals, min_size=1, max_size=6, unique=True), st.data())
def test_interpolation_hits_targets(src, data):
    src = sorted(src)
    dst = sorted(data.draw(st.lists(rationals, min_size=len(src), max_size=len(src), unique=True)))
    f = pl_interpolate(src, dst)
    assert [f.apply(x) for x in src] == dst


@given(bumps(up=True))
def test_single_up_bump_irreducible(b):
    assert pl_is_irreducible(b)


@given(pl_maps())
def test_support_bumps_cover_moved_points(f):
    supp, bs = pl_support(f)
    for (x, _y) in f.breakpoints:
        for probe in (x, x + Fraction(1, 1000)):
            assert (f.apply(probe) != probe) == (probe in supp)
