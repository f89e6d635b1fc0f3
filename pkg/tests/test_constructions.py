import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.constructions import (
    UnsupportedSpecError,
    example_nc_decide,
    lemma31_witnesses,
    random_admissible_pair,
    spine_order_props,
)
from lperm.pl import PLMap, PLQGroup, PreconditionError, pl_interpolate
from lperm.wreath import ChainSpec, WreathGroup, wr_meet


def test_lemma31_direct_frozen():
    h = PLMap.bump(0, Fraction(1, 2), Fraction(3, 4), 1)
    g = pl_interpolate([0, 1], [2, 3])
    inst = lemma31_witnesses(h, g)
    assert inst.case == "direct" and inst.verify()
    # the check point is carried to gamma one way and to gamma h^-g the other
    H2 = h.conj(g)
    assert inst.rhs == H2.inverse().apply(inst.lhs)


def test_lemma31_mirror_frozen():
    h = PLMap.bump(2, Fraction(5, 2), Fraction(11, 4), 3)
    g = pl_interpolate([2, 3], [0, 1])
    inst = lemma31_witnesses(h, g)
    assert inst.case == "mirror" and inst.verify()


def test_lemma31_overlap_rejected():
    h = PLMap.bump(0, 1, 2, 3)
    with pytest.raises(PreconditionError):
        lemma31_witnesses(h, pl_interpolate([0, 3], [1, 4]))


def test_lemma31_eight_point_interpolation():
    src = [Fraction(i) for i in range(8)]
    dst = [Fraction(i * i, 3) for i in range(8)]
    f = pl_interpolate(src, dst)
    assert [f.apply(x) for x in src] == dst


@given(st.integers(0, 10_000), st.sampled_from(["up", "down"]), st.sampled_from(["right", "left"]))
def test_lemma31_random(seed, direction, side):
    h, g = random_admissible_pair(random.Random(seed), direction, side)
    inst = lemma31_witnesses(h, g)
    assert inst.verify()
    hf = h.conj(inst.f)
    assert inst.w1 == h * hf.inverse() * h.inverse() * hf


def test_example_nc_frozen():
    assert example_nc_decide(ChainSpec(("Z",)))[0] is True
    verdict, res = example_nc_decide(ChainSpec(("Z", "Z"), "default"))
    assert verdict is True and res.witness.default_moves(1)
    verdict, res = example_nc_decide(ChainSpec(("Z", "Z")))
    assert verdict is False and res.refutations
    for r in res.refutations:
        assert wr_meet(r["g"], r["h"]).is_identity()
    assert any(r["lifted"] for r in res.refutations)
    with pytest.raises(UnsupportedSpecError):
        example_nc_decide(ChainSpec(("Z", "PLQ")))


def test_example_nc_three_levels():
    assert example_nc_decide(ChainSpec(("Z", "Z", "Z")))[0] is False
    assert example_nc_decide(ChainSpec(("Z", "Z", "Z"), "default"))[0] is True


def test_spine_order_props_frozen():
    p = spine_order_props(WreathGroup(ChainSpec(("Z", "Z", "Z"))))
    assert p["top_in_spine"] and p["all_have_successor"] and p["controlled"]
    assert not p["all_have_predecessor"]
    assert all(c["chi"] == c["expected"] for c in p["checks"])
    assert any(c["upper"] == 0 and c["lower"] == 2 and not c["chi"] for c in p["checks"])
    q = spine_order_props(PLQGroup())
    assert q["top_in_spine"] and q["checks"] == []
