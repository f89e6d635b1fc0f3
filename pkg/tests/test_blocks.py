from fractions import Fraction

import pytest
from hypothesis import given

from lperm.blocks import (
    DEFAULT_BATTERY,
    ColouredChain,
    OBlock,
    Spine,
    block_of,
    coloured_chain,
    commutator,
    hypothesis_report,
    irreducible_block,
    minimal_abelian,
    q_member,
    rst_member,
    smallest_block,
    spine,
    st_member,
    v_of,
)
from lperm.pl import PLQGroup, PreconditionError
from lperm.wreath import wr_apply, wreath

from conftest import PP, ZZ, wreath_elements, wreath_points

PLQ = PLQGroup()


def test_v_of_frozen():
    assert v_of((0, 0), (0, 5)) == 1
    assert v_of((0, 0), (1, 0)) == 0
    assert v_of(Fraction(1), Fraction(3), PLQ) == 0
    with pytest.raises(PreconditionError):
        v_of((0, 0), (0, 0))


def test_block_of_frozen():
    assert block_of((3, 7), 1) == OBlock(1, (3,))
    assert block_of((3, 7), 0) == OBlock(0, ())


def test_stabilizers_frozen():
    inner = ZZ.element({(2,): 1})
    outer = ZZ.element({(): 1})
    blk = OBlock(1, (2,))
    assert rst_member(inner, blk) and st_member(inner, blk)
    assert not rst_member(outer, blk) and not st_member(outer, blk)
    assert q_member(inner, blk)


def test_spine_frozen():
    sp = spine(ZZ)
    assert sp.levels == (1, 0) and sp.top == 0 and sp.minimal == 1
    assert sp.covers(0, 1) and not sp.covers(1, 0)
    assert spine(PLQ).levels == (0,)


def test_hypothesis_flags_frozen():
    zz = hypothesis_report(ZZ)
    assert zz.controlled and zz.has_minimal and not zz.dagger
    assert hypothesis_report(PLQ).dagger
    assert hypothesis_report(PP).daggerdagger


def test_minimal_abelian_frozen():
    res = minimal_abelian(ZZ)
    assert res.witness == ZZ.element({(0,): 1}) and res.checked_pairs > 0
    for G in (PLQ, PP):
        res = minimal_abelian(G)
        assert res.witness is None and res.counterexamples
        for h1, a, b in res.counterexamples:
            assert not commutator(G, a, b).is_identity()


def test_coloured_chain_frozen():
    zz = coloured_chain(ZZ, {"abelian": DEFAULT_BATTERY["abelian"]})
    assert [lv["colours"]["abelian"] for lv in zz.to_json()["levels"]] == [True, True]
    pp = coloured_chain(PP, {"abelian": DEFAULT_BATTERY["abelian"]})
    assert [lv["colours"]["abelian"] for lv in pp.to_json()["levels"]] == [False, False]
    mixed = coloured_chain(wreath(["Z", "PLQ"]))
    cols = [lv["colours"] for lv in mixed.to_json()["levels"]]
    assert cols[0] != cols[1]


def test_coloured_chain_needs_a_colour_per_level():
    with pytest.raises(ValueError):
        ColouredChain(Spine((0,), ("Z",)), {0: {}})


@given(wreath_elements())
def test_smallest_block_contains_support(a):
    sb = smallest_block(a)
    if sb is None:
        assert a.is_identity()
        return
    assert rst_member(a, sb)
    for i, p, _ in a.nontrivial_entries():
        assert sb.contains(OBlock(i, p)) or sb.level <= i and p[: sb.level] == sb.prefix


@given(wreath_elements(), wreath_points())
def test_rst_elements_fix_outside(a, p):
    sb = smallest_block(a)
    if sb is not None and not sb.contains_point(p):
        assert wr_apply(a, p) == p


@given(wreath_elements())
def test_irreducible_block_is_rst(a):
    b = irreducible_block(a)
    if b is not None:
        assert q_member(a, b)
