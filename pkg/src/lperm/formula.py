"""First-order language of l-groups: AST, parser, printer and transforms.

Grammar (loosest binding first)::

    formula  := disj ('->' formula)?
    disj     := conj ('|' disj)?
    conj     := unary ('&' conj)?
    unary    := '~' unary | ('A'|'E') var (',' var)* '.' formula | atom
    atom     := '(' formula ')' | NAME '(' term, ... ')' | term REL term
    REL      := '=' | '!=' | '>' | '<' | '>=' | '<='
    term     := factor ('*' factor)*
    factor   := primary ('^' primary)*          # t^s = inv(s)*t*s
    primary  := var | '1' | inv(t) | join(t,t) | meet(t,t) | [s,t] | '(' term ')'

Relations are normalized at parse time: ``u = v`` becomes ``u*inv(v) = 1``
(``u = 1`` stays as is), ``s >= t`` becomes ``join(s,t) = s`` and ``s > t``
is ``s >= t & s != t``.  ``NAME(...)`` calls one of the named formulas of
:data:`MACROS`; :func:`expand` unfolds them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import count
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union


# -- AST --------------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Inv:
    arg: "Term"


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


Term = Union[Var, One, Mul, Inv, Join, Meet]


@dataclass(frozen=True)
class Eq1:
    term: Term


@dataclass(frozen=True)
class Neq1:
    term: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Pred:
    name: str
    args: Tuple[Term, ...]


Formula = Union[Eq1, Neq1, And, Or, Not, Implies, Forall, Exists, Pred]

TERM_TYPES = (Var, One, Mul, Inv, Join, Meet)
QUANTIFIERS = (Forall, Exists)


# -- term sugar -------------------------------------------------------------------

def comm(a: Term, b: Term) -> Term:
    """``[a,b] = inv(a)*inv(b)*a*b``."""
    return Mul(Mul(Mul(Inv(a), Inv(b)), a), b)


def conj(t: Term, s: Term) -> Term:
    """``t^s = inv(s)*t*s``."""
    return Mul(Mul(Inv(s), t), s)


def eq(u: Term, v: Term) -> Formula:
    return Eq1(u if v == One() else Mul(u, Inv(v)))


def neq(u: Term, v: Term) -> Formula:
    return Neq1(u if v == One() else Mul(u, Inv(v)))


def ge(s: Term, t: Term) -> Formula:
    return Eq1(Mul(Join(s, t), Inv(s)))


def gt(s: Term, t: Term) -> Formula:
    return And(ge(s, t), neq(s, t))


def conjunction(parts: Sequence[Formula]) -> Formula:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def conjuncts(f: Formula) -> List[Formula]:
    """Top-level conjuncts along the right spine of nested ``&``."""
    out = []
    while isinstance(f, And) and _sugar_relation(f) is None:
        out.append(f.left)
        f = f.right
    out.append(f)
    return out


# -- named formulas ---------------------------------------------------------------

MACRO_TEXT: Dict[str, Tuple[Tuple[str, ...], str]] = {
    "B": (("g",), "g > 1 & A g1,g2. ((join(g1,g2) = g & meet(g1,g2) = 1) -> (g1 = 1 | g2 = 1))"),
    "phi": (("h", "x"), "B(h) & E y. x = [inv(h), h^y]"),
    "psi": (("h", "x"), "E t,y1,y2. (phi(h,y1) & phi(h^t,y2) & phi(h^t,x) & [y1,y2] != 1)"),
    "gamma1": (("h", "x"), "A y. (psi(h,y) -> [x,y] = 1)"),
    "gamma": (("h", "x"), "A y. (gamma1(h,y) -> [x,y] = 1)"),
    "eta": (("h1", "h2"), "B(h1) & B(h2) & A x. (gamma(h1,x) -> gamma(h2,x))"),
    "vartheta": (("hp", "h"), "eta(hp,h) & ~eta(h,hp)"),
    "mu": (("h", "g"), "A x. ((gamma(h,x) -> gamma(g,x)) & (gamma(g,x) -> gamma(h,x)))"),
    "chi": (("h1", "h2"),
            "h1 < h2 & eta(h1,h2) & ~eta(h2,h1) & (E x. (x != 1 & gamma(h1,x))) & "
            "A hs. ((eta(h1,hs) & ~eta(hs,h1)) -> eta(h2,hs))"),
}

MACROS = tuple(MACRO_TEXT)
ARITY = {name: len(params) for name, (params, _) in MACRO_TEXT.items()}
RESERVED = {"A", "E", "inv", "join", "meet"} | set(MACROS)

_BODIES: Dict[str, Formula] = {}


def _macro_body(name: str) -> Tuple[Tuple[str, ...], Formula]:
    params, text = MACRO_TEXT[name]
    if name not in _BODIES:
        _BODIES[name] = parse(text)
    return params, _BODIES[name]


def _as_term(a) -> Term:
    if isinstance(a, str):
        return Var(a)
    if isinstance(a, TERM_TYPES):
        return a
    raise TypeError(f"not a term: {a!r}")


def paper_formula(name: str, args: Sequence, expand_all: bool = False) -> Formula:
    """The named formula instantiated at ``args``, one level deep.

    Sub-formulas stay as :class:`Pred` calls unless ``expand_all`` is set.
    """
    if name not in MACRO_TEXT:
        raise ValueError(f"unknown formula {name!r}; expected one of {', '.join(MACROS)}")
    if len(args) != ARITY[name]:
        raise ValueError(f"{name} takes {ARITY[name]} argument(s), got {len(args)}")
    params, body = _macro_body(name)
    out = substitute(body, dict(zip(params, map(_as_term, args))))
    return expand(out) if expand_all else out


def unfold(p: Pred) -> Formula:
    return paper_formula(p.name, p.args)


def expand(f: Formula, names: Optional[Iterable[str]] = None) -> Formula:
    """Replace every macro call (or only those in ``names``) by its definition."""
    only = None if names is None else set(names)

    def go(g):
        if isinstance(g, Pred):
            if only is None or g.name in only:
                return go(unfold(g))
            return g
        return _map_children(g, go)

    return go(f)


# -- structural helpers ---------------------------------------------------------

def _map_children(f: Formula, fn) -> Formula:
    if isinstance(f, (And, Or, Implies)):
        return type(f)(fn(f.left), fn(f.right))
    if isinstance(f, Not):
        return Not(fn(f.arg))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, fn(f.body))
    return f


def term_vars(t: Term) -> set:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, One):
        return set()
    if isinstance(t, Inv):
        return term_vars(t.arg)
    return term_vars(t.left) | term_vars(t.right)


def free_vars(f: Formula) -> set:
    if isinstance(f, (Eq1, Neq1)):
        return term_vars(f.term)
    if isinstance(f, Pred):
        out = set()
        for a in f.args:
            out |= term_vars(a)
        return out
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.arg)
    return free_vars(f.body) - {f.var}


def bound_vars(f: Formula) -> set:
    if isinstance(f, (And, Or, Implies)):
        return bound_vars(f.left) | bound_vars(f.right)
    if isinstance(f, Not):
        return bound_vars(f.arg)
    if isinstance(f, QUANTIFIERS):
        return {f.var} | bound_vars(f.body)
    return set()


def all_vars(f: Formula) -> set:
    return free_vars(f) | bound_vars(f)


def fresh_name(base: str, used: set) -> str:
    if base not in used:
        return base
    for i in count(1):
        cand = f"{base}_{i}"
        if cand not in used:
            return cand


def subst_term(t: Term, m: Dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return m.get(t.name, t)
    if isinstance(t, One):
        return t
    if isinstance(t, Inv):
        return Inv(subst_term(t.arg, m))
    return type(t)(subst_term(t.left, m), subst_term(t.right, m))


def substitute(f: Formula, m: Dict[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    m = {k: v for k, v in m.items() if k in free_vars(f)}
    if not m:
        return f
    if isinstance(f, Eq1):
        return Eq1(subst_term(f.term, m))
    if isinstance(f, Neq1):
        return Neq1(subst_term(f.term, m))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(subst_term(a, m) for a in f.args))
    if isinstance(f, QUANTIFIERS):
        incoming = set()
        for t in m.values():
            incoming |= term_vars(t)
        v, body = f.var, f.body
        if v in incoming:
            nv = fresh_name(v, incoming | all_vars(body) | set(m))
            body = substitute(body, {v: Var(nv)})
            v = nv
        return type(f)(v, substitute(body, m))
    return _map_children(f, lambda g: substitute(g, m))


def standardize(f: Formula) -> Formula:
    """Rename binders so none clashes with a free variable or another binder."""
    used = set(free_vars(f))

    def go(g):
        if isinstance(g, QUANTIFIERS):
            v = g.var
            body = g.body
            if v in used:
                nv = fresh_name(v, used | all_vars(body))
                body = substitute(body, {v: Var(nv)})
                v = nv
            used.add(v)
            return type(g)(v, go(body))
        return _map_children(g, go)

    return go(f)


def alpha_eq(a, b) -> bool:
    """Syntactic equality up to renaming of bound variables."""
    return _alpha(a, b, {}, {})


def _alpha_term(s: Term, t: Term, ml: dict, mr: dict) -> bool:
    if type(s) is not type(t):
        return False
    if isinstance(s, Var):
        if s.name in ml or t.name in mr:
            return ml.get(s.name) == t.name and mr.get(t.name) == s.name
        return s.name == t.name
    if isinstance(s, One):
        return True
    if isinstance(s, Inv):
        return _alpha_term(s.arg, t.arg, ml, mr)
    return _alpha_term(s.left, t.left, ml, mr) and _alpha_term(s.right, t.right, ml, mr)


def _alpha(a, b, ml: dict, mr: dict) -> bool:
    if isinstance(a, TERM_TYPES):
        return isinstance(b, TERM_TYPES) and _alpha_term(a, b, ml, mr)
    if type(a) is not type(b):
        return False
    if isinstance(a, (Eq1, Neq1)):
        return _alpha_term(a.term, b.term, ml, mr)
    if isinstance(a, Pred):
        return a.name == b.name and len(a.args) == len(b.args) and all(
            _alpha_term(x, y, ml, mr) for x, y in zip(a.args, b.args))
    if isinstance(a, (And, Or, Implies)):
        return _alpha(a.left, b.left, ml, mr) and _alpha(a.right, b.right, ml, mr)
    if isinstance(a, Not):
        return _alpha(a.arg, b.arg, ml, mr)
    return _alpha(a.body, b.body, {**ml, a.var: b.var}, {**mr, b.var: a.var})


def quantifier_count(f: Formula) -> int:
    if isinstance(f, QUANTIFIERS):
        return 1 + quantifier_count(f.body)
    if isinstance(f, (And, Or, Implies)):
        return quantifier_count(f.left) + quantifier_count(f.right)
    if isinstance(f, Not):
        return quantifier_count(f.arg)
    return 0


def quantifier_depth(f: Formula) -> int:
    if isinstance(f, QUANTIFIERS):
        return 1 + quantifier_depth(f.body)
    if isinstance(f, (And, Or, Implies)):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    if isinstance(f, Not):
        return quantifier_depth(f.arg)
    return 0


def macro_calls(f: Formula) -> set:
    if isinstance(f, Pred):
        return {f.name}
    if isinstance(f, (And, Or, Implies)):
        return macro_calls(f.left) | macro_calls(f.right)
    if isinstance(f, Not):
        return macro_calls(f.arg)
    if isinstance(f, QUANTIFIERS):
        return macro_calls(f.body)
    return set()


# -- negation normal form -----------------------------------------------------------

def nnf(f: Formula) -> Formula:
    """Push negations to the atoms and expand implications.

    Macro calls count as atoms, so a negated call stays ``~NAME(...)``.
    """
    if isinstance(f, (Eq1, Neq1, Pred)):
        return f
    if isinstance(f, And):
        return And(nnf(f.left), nnf(f.right))
    if isinstance(f, Or):
        return Or(nnf(f.left), nnf(f.right))
    if isinstance(f, Implies):
        return Or(nnf(Not(f.left)), nnf(f.right))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, nnf(f.body))
    g = f.arg
    if isinstance(g, Eq1):
        return Neq1(g.term)
    if isinstance(g, Neq1):
        return Eq1(g.term)
    if isinstance(g, Pred):
        return f
    if isinstance(g, Not):
        return nnf(g.arg)
    if isinstance(g, And):
        return Or(nnf(Not(g.left)), nnf(Not(g.right)))
    if isinstance(g, Or):
        return And(nnf(Not(g.left)), nnf(Not(g.right)))
    if isinstance(g, Implies):
        return And(nnf(g.left), nnf(Not(g.right)))
    if isinstance(g, Forall):
        return Exists(g.var, nnf(Not(g.body)))
    return Forall(g.var, nnf(Not(g.body)))


# -- relativization ---------------------------------------------------------------

def relativize(sigma: Formula, h: str = "h") -> Formula:
    """Translate ``sigma`` into a statement about the component at ``h``'s block.

    Atoms ``t = 1`` become ``E h'.(vartheta(h',h) & gamma(h',t))`` and
    ``t != 1`` becomes ``A h'.(vartheta(h',h) -> ~gamma(h',t))``.  A run of
    like quantifiers ``Q x1..xn`` guards all its variables at once with
    ``gamma(h,xi)``.  Macro calls are unfolded first.
    """
    sigma = expand(sigma)
    if h in bound_vars(sigma):
        raise ValueError(f"variable {h!r} is bound in the sentence")
    used = all_vars(sigma) | {h}
    hp = h + "'"
    while hp in used:
        hp += "'"
    H, HP = Var(h), Var(hp)

    def guard(xs):
        return conjunction([Pred("gamma", (H, Var(x))) for x in xs])

    def go(f):
        if isinstance(f, Eq1):
            return Exists(hp, And(Pred("vartheta", (HP, H)), Pred("gamma", (HP, f.term))))
        if isinstance(f, Neq1):
            return Forall(hp, Implies(Pred("vartheta", (HP, H)), Not(Pred("gamma", (HP, f.term)))))
        if isinstance(f, (And, Or)):
            return type(f)(go(f.left), go(f.right))
        if isinstance(f, QUANTIFIERS):
            kind, xs, body = type(f), [], f
            while isinstance(body, kind):
                xs.append(body.var)
                body = body.body
            inner = go(body)
            out = Implies(guard(xs), inner) if kind is Forall else And(guard(xs), inner)
            for x in reversed(xs):
                out = kind(x, out)
            return out
        raise ValueError(f"unexpected node after nnf: {f!r}")

    return go(nnf(sigma))


# -- tokenizer and parser ------------------------------------------------------------

class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        where = "end of input" if pos >= len(text) else f"position {pos}"
        super().__init__(f"{message} at {where}")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"\s*(?:(->|!=|>=|<=|[()\[\],.&|~*^=<>])|([A-Za-z_][A-Za-z0-9_]*'*)|(1)(?![0-9]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("op", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("one", "1", start))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


_RELATIONS = {"=", "!=", ">", "<", ">=", "<="}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg: str):
        raise FormulaSyntaxError(msg, self.tok[2], self.text)

    def accept(self, value: str) -> bool:
        if self.tok[0] == "op" and self.tok[1] == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            got = self.tok[1] or "end of input"
            self.error(f"expected {value!r}, got {got!r}")

    def variable(self) -> str:
        kind, val, _ = self.tok
        if kind != "name" or val in RESERVED:
            self.error(f"expected a variable, got {val or 'end of input'!r}")
        self.i += 1
        return val

    def formula(self) -> Formula:
        left = self.disj()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        if self.accept("|"):
            return Or(left, self.disj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        if self.accept("&"):
            return And(left, self.conj())
        return left

    def unary(self) -> Formula:
        if self.accept("~"):
            return Not(self.unary())
        kind, val, _ = self.tok
        if kind == "name" and val in ("A", "E"):
            self.i += 1
            names = [self.variable()]
            while self.accept(","):
                names.append(self.variable())
            self.expect(".")
            body = self.formula()
            q = Forall if val == "A" else Exists
            for n in reversed(names):
                body = q(n, body)
            return body
        return self.atom()

    def atom(self) -> Formula:
        kind, val, _ = self.tok
        if kind == "name" and val in MACRO_TEXT:
            self.i += 1
            self.expect("(")
            args = [self.term()]
            while self.accept(","):
                args.append(self.term())
            self.expect(")")
            if len(args) != ARITY[val]:
                self.error(f"{val} takes {ARITY[val]} argument(s)")
            return Pred(val, tuple(args))
        if kind == "op" and val == "(":
            save = self.i
            try:
                return self.relation()
            except FormulaSyntaxError:
                self.i = save
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        return self.relation()

    def relation(self) -> Formula:
        s = self.term()
        kind, op, _ = self.tok
        if kind != "op" or op not in _RELATIONS:
            self.error("expected a relation")
        self.i += 1
        t = self.term()
        if op == "=":
            return eq(s, t)
        if op == "!=":
            return neq(s, t)
        if op == ">=":
            return ge(s, t)
        if op == "<=":
            return ge(t, s)
        if op == ">":
            return gt(s, t)
        return gt(t, s)

    def term(self) -> Term:
        t = self.factor()
        while self.accept("*"):
            t = Mul(t, self.factor())
        return t

    def factor(self) -> Term:
        t = self.primary()
        while self.accept("^"):
            t = conj(t, self.primary())
        return t

    def primary(self) -> Term:
        kind, val, _ = self.tok
        if kind == "one":
            self.i += 1
            return One()
        if kind == "name" and val in ("inv", "join", "meet"):
            self.i += 1
            self.expect("(")
            a = self.term()
            if val == "inv":
                self.expect(")")
                return Inv(a)
            self.expect(",")
            b = self.term()
            self.expect(")")
            return Join(a, b) if val == "join" else Meet(a, b)
        if self.accept("["):
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect("]")
            return comm(a, b)
        if self.accept("("):
            t = self.term()
            self.expect(")")
            return t
        if kind == "name":
            return Var(self.variable())
        self.error(f"expected a term, got {val or 'end of input'!r}")


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.tok[0] != "eof":
        p.error(f"unexpected {p.tok[1]!r}")
    return standardize(f)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.tok[0] != "eof":
        p.error(f"unexpected {p.tok[1]!r}")
    return t


# -- printer ---------------------------------------------------------------------------

def _match_comm(t: Term):
    if (isinstance(t, Mul) and isinstance(t.left, Mul) and isinstance(t.left.left, Mul)
            and isinstance(t.left.left.left, Inv) and isinstance(t.left.left.right, Inv)):
        a, b = t.left.left.left.arg, t.left.left.right.arg
        if t.left.right == a and t.right == b:
            return a, b
    return None


def _match_conj(t: Term):
    if isinstance(t, Mul) and isinstance(t.left, Mul) and isinstance(t.left.left, Inv):
        if t.left.left.arg == t.right:
            return t.left.right, t.right
    return None


def print_term(t: Term) -> str:
    return _term(t, 0)


def _term(t: Term, ctx: int) -> str:
    """``ctx``: 0 any, 1 right operand of ``*``, 2 operand of ``^``."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, One):
        return "1"
    if isinstance(t, Inv):
        return f"inv({_term(t.arg, 0)})"
    if isinstance(t, Join):
        return f"join({_term(t.left, 0)}, {_term(t.right, 0)})"
    if isinstance(t, Meet):
        return f"meet({_term(t.left, 0)}, {_term(t.right, 0)})"
    c = _match_comm(t)
    if c:
        return f"[{_term(c[0], 0)}, {_term(c[1], 0)}]"
    c = _match_conj(t)
    if c:
        s = f"{_term(c[0], 2)}^{_term(c[1], 2)}"
        # a^b^c would re-associate; wrap when used as a '^' operand
        return f"({s})" if ctx == 2 else s
    s = f"{_term(t.left, 0)} * {_term(t.right, 1)}"
    return f"({s})" if ctx else s


def _sugar_relation(f: Formula) -> Optional[str]:
    """Render the normal forms of ``>=`` and ``>`` back as relations."""
    def as_ge(g):
        if isinstance(g, Eq1) and isinstance(g.term, Mul) and isinstance(g.term.left, Join) \
                and isinstance(g.term.right, Inv) and g.term.right.arg == g.term.left.left:
            return g.term.left.left, g.term.left.right
        return None

    if isinstance(f, And):
        p = as_ge(f.left)
        if p and f.right == neq(*p):
            return f"{_term(p[0], 0)} > {_term(p[1], 0)}"
        return None
    p = as_ge(f)
    if p:
        return f"{_term(p[0], 0)} >= {_term(p[1], 0)}"
    return None


def _atom(f: Formula) -> Optional[str]:
    s = _sugar_relation(f)
    if s is not None:
        return s
    if isinstance(f, (Eq1, Neq1)):
        rel = "=" if isinstance(f, Eq1) else "!="
        t = f.term
        if isinstance(t, Mul) and isinstance(t.right, Inv) and t.right.arg != One() \
                and _match_comm(t) is None and _match_conj(t) is None:
            return f"{_term(t.left, 0)} {rel} {_term(t.right.arg, 0)}"
        return f"{_term(t, 0)} {rel} 1"
    if isinstance(f, Pred):
        return f"{f.name}(" + ", ".join(_term(a, 0) for a in f.args) + ")"
    return None


_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}


def _prec(f: Formula) -> int:
    if _atom(f) is not None:
        return 5
    if isinstance(f, QUANTIFIERS):
        return 0
    return _PREC[type(f)]


def print_formula(f: Formula) -> str:
    return _fmt(f, True)


def _wrap(f: Formula, need: int, tail: bool) -> str:
    if _prec(f) < need or (_prec(f) == 0 and not tail):
        return f"({_fmt(f, True)})"
    return _fmt(f, tail)


def _fmt(f: Formula, tail: bool) -> str:
    a = _atom(f)
    if a is not None:
        return a
    if isinstance(f, QUANTIFIERS):
        kind, names, body = type(f), [], f
        while isinstance(body, kind):
            names.append(body.var)
            body = body.body
        q = "A" if kind is Forall else "E"
        return f"{q} {','.join(names)}. {_fmt(body, True)}"
    if isinstance(f, Not):
        return "~" + _wrap(f.arg, 4, tail)
    p = _PREC[type(f)]
    sym = {Implies: "->", Or: "|", And: "&"}[type(f)]
    return f"{_wrap(f.left, p + 1, False)} {sym} {_wrap(f.right, p, tail)}"


def show(x) -> str:
    return print_term(x) if isinstance(x, TERM_TYPES) else print_formula(x)


# -- JSON ----------------------------------------------------------------------------

def to_json(x) -> dict:
    if isinstance(x, Var):
        return {"var": x.name}
    if isinstance(x, One):
        return {"one": True}
    if isinstance(x, Inv):
        return {"inv": to_json(x.arg)}
    if isinstance(x, (Mul, Join, Meet)):
        return {type(x).__name__.lower(): [to_json(x.left), to_json(x.right)]}
    if isinstance(x, Eq1):
        return {"eq1": to_json(x.term)}
    if isinstance(x, Neq1):
        return {"neq1": to_json(x.term)}
    if isinstance(x, (And, Or, Implies)):
        return {type(x).__name__.lower(): [to_json(x.left), to_json(x.right)]}
    if isinstance(x, Not):
        return {"not": to_json(x.arg)}
    if isinstance(x, QUANTIFIERS):
        return {type(x).__name__.lower(): {"var": x.var, "body": to_json(x.body)}}
    if isinstance(x, Pred):
        return {"pred": {"name": x.name, "args": [to_json(a) for a in x.args]}}
    raise TypeError(f"not an AST node: {x!r}")
