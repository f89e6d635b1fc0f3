import pytest
from hypothesis import given
from hypothesis import strategies as st

from lperm.formula import (
    MACROS,
    And,
    Eq1,
    Exists,
    Forall,
    FormulaSyntaxError,
    Implies,
    Inv,
    Join,
    Meet,
    Mul,
    Neq1,
    Not,
    One,
    Or,
    Pred,
    Var,
    all_vars,
    alpha_eq,
    bound_vars,
    comm,
    conjuncts,
    free_vars,
    macro_calls,
    nnf,
    paper_formula,
    parse,
    print_formula,
    quantifier_count,
    quantifier_depth,
    relativize,
    substitute,
    to_json,
)

NAMES = ["f", "g", "x", "y"]

terms = st.recursive(
    st.one_of(st.sampled_from(NAMES).map(Var), st.just(One())),
    lambda t: st.one_of(
        st.tuples(t, t).map(lambda p: Mul(*p)),
        t.map(Inv),
        st.tuples(t, t).map(lambda p: Join(*p)),
        st.tuples(t, t).map(lambda p: Meet(*p)),
    ),
    max_leaves=4,
)

formulas = st.recursive(
    st.one_of(terms.map(Eq1), terms.map(Neq1)),
    lambda f: st.one_of(
        st.tuples(f, f).map(lambda p: And(*p)),
        st.tuples(f, f).map(lambda p: Or(*p)),
        st.tuples(f, f).map(lambda p: Implies(*p)),
        f.map(Not),
        st.tuples(st.sampled_from(NAMES), f).map(lambda p: Forall(*p)),
        st.tuples(st.sampled_from(NAMES), f).map(lambda p: Exists(*p)),
    ),
    max_leaves=6,
)


def _no_implies_and_negated_atoms_only(f):
    if isinstance(f, Implies):
        return False
    if isinstance(f, Not):
        return isinstance(f.arg, Pred)
    for child in ("left", "right", "body"):
        if hasattr(f, child) and not isinstance(getattr(f, child), (Var, One, Mul, Inv, Join, Meet)):
            if not _no_implies_and_negated_atoms_only(getattr(f, child)):
                return False
    return True


def test_abelian_ast():
    f = parse("A f. A g. [f,g] = 1")
    assert f == Forall("f", Forall("g", Eq1(Mul(Mul(Mul(Inv(Var("f")), Inv(Var("g"))), Var("f")), Var("g")))))
    assert f == parse("A f,g. [f,g] = 1")
    assert Eq1(comm(Var("f"), Var("g"))) == f.body.body


def test_malformed_reports_end_of_input():
    with pytest.raises(FormulaSyntaxError, match="end of input"):
        parse("A f")


def test_nnf_frozen():
    phi = parse("x = 1 & y != 1")
    assert nnf(Not(Not(phi))) == nnf(phi)
    assert nnf(Not(Forall("x", phi))) == Exists("x", nnf(Not(phi)))
    assert nnf(Implies(phi, phi)) == Or(nnf(Not(phi)), nnf(phi))


def test_paper_formula_shapes():
    chi = paper_formula("chi", ["a", "b"])
    assert len(conjuncts(chi)) == 5
    assert macro_calls(paper_formula("gamma", ["h", "x"])) == {"gamma1"}
    full = paper_formula("gamma", ["h", "x"], expand_all=True)
    assert not macro_calls(full)
    assert quantifier_count(full) == 14 and quantifier_depth(full) == 7
    with pytest.raises(ValueError):
        paper_formula("gamma", ["h"])


def test_dependency_chain_closed():
    known = set()
    for name in ("B", "phi", "psi", "gamma1", "gamma", "eta", "chi", "vartheta", "mu"):
        args = ["a"] if name == "B" else ["a", "b"]
        assert macro_calls(paper_formula(name, args)) <= known
        known.add(name)
    assert known == set(MACROS)


def test_relativize_abelian_display():
    rel = relativize(parse("A f,g. [f,g] = 1"), "h")
    display = parse("A f. A g. ((gamma(h,f) & gamma(h,g)) -> E h'. (vartheta(h',h) & gamma(h',[f,g])))")
    assert alpha_eq(rel, display)


def test_relativize_atom():
    rel = relativize(parse("x = 1"), "h")
    assert rel == Exists("h'", And(Pred("vartheta", (Var("h'"), Var("h"))), Pred("gamma", (Var("h'"), Var("x")))))


def test_relativize_fresh_name():
    rel = relativize(parse("A h'. h' = 1"), "h")
    assert "h'" in bound_vars(rel)
    assert "h''" in bound_vars(rel)
    assert free_vars(rel) == {"h"}


def test_relativize_rejects_bound_h():
    with pytest.raises(ValueError):
        relativize(parse("A h. h = 1"), "h")


def test_substitution_avoids_capture():
    f = parse("E y. x * y = 1")
    g = substitute(f, {"x": Var("y")})
    assert free_vars(g) == {"y"}
    assert alpha_eq(g, parse("E z. y * z = 1"))


@given(formulas)
def test_print_parse_roundtrip(f):
    back = parse(print_formula(f))
    assert alpha_eq(back, f)
    assert print_formula(parse(print_formula(back))) == print_formula(back)


@given(formulas)
def test_nnf_shape_and_free_vars(f):
    g = nnf(f)
    assert _no_implies_and_negated_atoms_only(g)
    assert free_vars(g) == free_vars(f)
    assert nnf(g) == g


@given(formulas)
def test_relativize_sentence_has_only_h_free(f):
    sentence = f
    for v in sorted(free_vars(f)):
        sentence = Forall(v, sentence)
    rel = relativize(sentence, "h")
    assert free_vars(rel) == {"h"}
    assert quantifier_count(rel) >= quantifier_count(nnf(sentence))


@given(formulas)
def test_json_is_total(f):
    assert to_json(f)
    assert all_vars(f) >= free_vars(f)
