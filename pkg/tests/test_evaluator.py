from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.blocks import OBlock, element_at
from lperm.evaluator import (
    SearchBudget,
    UnboundVariableError,
    component_evaluate,
    cross_validate,
    enumerate_elements,
    evaluate,
    gamma_oracle,
    relation_oracles,
)
from lperm.formula import Not, paper_formula, parse
from lperm.pl import PLMap, PLQGroup, PreconditionError
from lperm.wreath import wr_mul

from conftest import PP, ZZ, wreath_elements

PLQ = PLQGroup()
BUMP = PLMap.bump(0, Fraction(1, 2), Fraction(3, 4), 1)


def inner(G, c, entry):
    return element_at(G, OBlock(1, (c,)), entry)


def test_trivial_identity():
    assert evaluate(parse("g * inv(g) = 1"), {"g": ZZ.element({(): 1})}, ZZ).verdict is True


def test_exists_with_witness():
    tv = evaluate(parse("E y. [h,y] != 1"), {"h": BUMP}, PLQ)
    assert tv.verdict is True and tv.witness[0][0] == "y"
    y = tv.witness[0][1]
    assert not (BUMP.inverse() * y.inverse() * BUMP * y).is_identity()


def test_forall_counterexample():
    tv = evaluate(parse("A h. h = 1"), {}, ZZ)
    assert tv.verdict is False and not tv.witness[0][1].is_identity()


def test_unbound_variable():
    with pytest.raises(UnboundVariableError):
        evaluate(parse("x = 1"), {}, ZZ)


def test_gamma_oracle_frozen():
    b = PLMap.bump(0, 1, 2, 3)
    h = inner(PP, Fraction(0), b)
    assert gamma_oracle(h, inner(PP, Fraction(0), PLMap.bump(1, 2, Fraction(5, 2), 3)), PP)
    assert not gamma_oracle(h, PP.element({(): b}), PP)
    assert gamma_oracle(h, PP.identity(), PP)
    with pytest.raises(PreconditionError):
        gamma_oracle(PP.identity(), h, PP)


def test_relation_oracles_frozen():
    b = PLMap.bump(0, 1, 2, 3)
    h1 = inner(PP, Fraction(3, 2), b)
    h2 = PP.element({(): b})
    r = relation_oracles(h1, h2, PP)
    assert r["eta"] and r["chi"]
    same = relation_oracles(h1, inner(PP, Fraction(3, 2), PLMap.bump(0, 1, 3, 4)), PP)
    assert same["mu"] and not same["vartheta"]
    far = relation_oracles(h1, inner(PP, Fraction(7), b), PP)
    assert not far["eta"] and not far["eta_rev"]


def test_cross_validate_gamma_pp():
    b = PLMap.bump(0, 1, 2, 3)
    hs = [inner(PP, Fraction(i, 2), b) for i in range(4)] + [PP.element({(): b})]
    xs = [PP.identity(), inner(PP, Fraction(0), b), PP.element({(): b}), inner(PP, Fraction(1, 2), b)]
    pairs = [(h, x) for h in hs for x in xs][:20]
    rep = cross_validate("gamma", pairs, PP, SearchBudget(max_elements=10, depth=2))
    assert not rep.disagreements and rep.total == 20


def test_cross_validate_eta_same_block():
    hs = [inner(ZZ, 0, n) for n in (1, 2)]
    rep = cross_validate("eta", [(a, b) for a in hs for b in hs], ZZ, SearchBudget(max_elements=10, depth=2))
    assert not rep.disagreements


def test_component_evaluate():
    ab = parse("A f,g. [f,g] = 1")
    assert component_evaluate(ab, "Z").verdict is True
    assert component_evaluate(ab, "PLQ").verdict is False


def test_oracle_and_syntactic_agree_on_gamma_at_one():
    h = inner(ZZ, 0, 1)
    f = paper_formula("gamma", ["h", "x"])
    tv = evaluate(f, {"h": h, "x": ZZ.identity()}, ZZ, SearchBudget(max_elements=10, depth=2), mode="syntactic")
    assert tv.verdict is True


@given(st.integers(0, 5))
def test_enumeration_deterministic(seed):
    b = SearchBudget(max_elements=25, seed=seed)
    first = list(enumerate_elements(ZZ, b))
    assert first == list(enumerate_elements(ZZ, b))
    assert first[0].is_identity() and len(first) == len(set(first)) == 25


SENTENCES = [parse(s) for s in (
    "A f,g. [f,g] = 1",
    "E g. g > 1",
    "E g. (g > 1 & A h. (h > 1 -> meet(g,h) > 1))",
    "A x. (x = 1 | x != 1)",
    "E x,y. (x * y != y * x)",
)]


@given(st.sampled_from(SENTENCES), st.sampled_from(["ZZ", "PLQ"]))
def test_kleene_negation(f, which):
    G = ZZ if which == "ZZ" else PLQ
    b = SearchBudget(max_elements=12, depth=2)
    v, w = evaluate(f, {}, G, b).verdict, evaluate(Not(f), {}, G, b).verdict
    assert w == (None if v is None else not v)


@given(wreath_elements(), wreath_elements())
def test_definite_verdicts_are_sound(a, b):
    f = parse("[a,b] = 1")
    tv = evaluate(f, {"a": a, "b": b}, ZZ)
    assert tv.verdict == (wr_mul(a, b) == wr_mul(b, a))
