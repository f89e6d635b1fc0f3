"""Three-valued evaluation of formulas over the computable models.

Quantifiers range over infinite groups, so bounded search can only refute
universals and confirm existentials.  A universal with no counterexample
gets one more chance: the variable is bound to a free symbol and the body
is evaluated again; equations whose words reduce to the empty word hold
for every value, which settles identities such as ``[1, y] = 1``.

Two modes exist.  ``syntactic`` unfolds every named formula into its
definition.  ``oracle`` answers the named formulas ``B``, ``gamma``,
``eta``, ``vartheta``, ``mu`` and ``chi`` from block structure; ``phi``,
``psi`` and ``gamma1`` are still unfolded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence

from .blocks import (
    OBlock,
    component_group,
    irreducible_block,
    is_pl_model,
    model_kinds,
    model_ops,
    rst_member,
    smallest_block,
    spine,
)
from .formula import (
    And,
    Eq1,
    Exists,
    Forall,
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
    conjuncts,
    free_vars,
    paper_formula,
    term_vars,
    unfold,
)
from .pl import PLMap, PreconditionError
from .wreath import RepresentabilityError, WreathElement, comp_identity


# -- values --------------------------------------------------------------------------

@dataclass(frozen=True)
class TruthValue:
    verdict: Optional[bool]
    witness: Optional[tuple] = None

    @property
    def definite(self) -> bool:
        return self.verdict is not None

    def __str__(self) -> str:
        return "Unknown" if self.verdict is None else str(self.verdict)

    def negate(self) -> "TruthValue":
        return TruthValue(None if self.verdict is None else not self.verdict, self.witness)


TRUE = TruthValue(True)
FALSE = TruthValue(False)
UNKNOWN = TruthValue(None)


@dataclass(frozen=True)
class SearchBudget:
    max_elements: int = 40
    size_bound: int = 2
    seed: int = 0
    depth: int = 3


class UnboundVariableError(ValueError):
    pass


# -- enumeration --------------------------------------------------------------------

def _pl_grid(s: int) -> List[Fraction]:
    return [Fraction(k, s) for k in range(-s * s, s * s + 1)]


def _pl_bumps(s: int) -> List[PLMap]:
    """Up and down bumps with carrier endpoints on the tier-``s`` grid."""
    grid = _pl_grid(s)
    out = []
    pairs = sorted(((lo, hi) for lo in grid for hi in grid if lo < hi), key=lambda p: (p[1] - p[0], p[0]))
    for lo, hi in pairs:
        w = hi - lo
        mid = lo + w / 2
        out.append(PLMap.bump(lo, mid, mid + w / 4, hi))
        out.append(PLMap.bump(lo, mid, mid - w / 4, hi))
    return out


def _coords(kind: str, s: int) -> List:
    if kind == "Z":
        return [0] + [k for j in range(1, s) for k in (j, -j)]
    return [Fraction(1, 2), Fraction(-1, 2)] + [Fraction(k, 2) for j in range(1, s) for k in (2 * j + 1, -2 * j - 1)]


def _entries(kind: str, s: int) -> List:
    if kind == "Z":
        return [k for j in range(1, s + 1) for k in (j, -j)]
    return _pl_bumps(s)


def _generators(G, s: int) -> List:
    if is_pl_model(G):
        return _pl_bumps(s)
    spec = G.spec
    kinds = spec.levels
    out = []
    for i, kind in enumerate(kinds):
        prefixes = list(product(*[_coords(kinds[j], s) for j in range(i)]))
        for p in prefixes:
            for e in _entries(kind, s):
                out.append(_single(G, i, p, e))
    if spec.mode == "default":
        for i in range(1, len(kinds)):
            for e in _entries(kinds[i], s):
                defaults = [comp_identity(k) for k in kinds]
                defaults[i] = e
                out.append(WreathElement(spec, {}, defaults))
    return out


def _single(G, level: int, prefix: tuple, entry) -> WreathElement:
    spec = G.spec
    defaults = [comp_identity(k) for k in spec.levels]
    if level == 0:
        defaults[0] = entry
        return WreathElement(spec, {}, defaults)
    return WreathElement(spec, {prefix: entry}, defaults)


def enumerate_elements(G, budget: SearchBudget = SearchBudget()) -> Iterator:
    """Deterministic duplicate-free stream: identity, then tiers of growing size.

    Tier ``s`` lists single-entry generators (and, in default mode, single
    defaults), then products of two generators.  Tier 1 keeps its canonical
    order; later tiers are shuffled by ``budget.seed``.
    """
    mul = model_ops(G)[0]
    seen = set()
    count = 0

    def emit(x):
        nonlocal count
        if x in seen:
            return False
        seen.add(x)
        count += 1
        return True

    one = G.identity()
    emit(one)
    yield one
    gens: List = []
    for s in range(1, budget.size_bound + 1):
        new = [g for g in _generators(G, s) if g not in seen]
        rng = random.Random(budget.seed * 1000003 + s)
        if s > 1:
            rng.shuffle(new)
        for g in new:
            if count >= budget.max_elements:
                return
            if emit(g):
                yield g
        gens.extend(new)
        prods = [mul(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        if s > 1:
            rng.shuffle(prods)
        for x in prods:
            if count >= budget.max_elements:
                return
            if emit(x):
                yield x


# -- semantic oracles -------------------------------------------------------------------

def center_member(x, G) -> bool:
    """Membership in the center of the model."""
    kinds = model_kinds(G)
    if not is_pl_model(G) and kinds == ("Z",):
        return True
    if isinstance(x, PLMap):
        return x.is_identity()
    if x.is_identity():
        return True
    r = len(kinds)
    # innermost Z default translations commute with everything
    return (G.spec.mode == "default" and kinds[-1] == "Z" and r > 1 and not any(x.overrides)
            and all(not x.default_moves(i) for i in range(r - 1)))


def _gamma_set(h, G):
    """A hashable name for the set {x | gamma(h,x)}."""
    block = irreducible_block(h)
    if block is not None:
        return ("all",) if block.level == 0 else ("rst", block)
    if not is_pl_model(G) and model_kinds(G) == ("Z",):
        return ("all",)
    return ("center",)


def gamma_semantic(h, x, G) -> bool:
    block = irreducible_block(h)
    if block is not None:
        return rst_member(x, block)
    return center_member(x, G)


def gamma_oracle(h, x, G) -> bool:
    """``x`` lies in rst of the block of the irreducible ``h``."""
    block = irreducible_block(h)
    if block is None:
        raise PreconditionError("gamma_oracle needs an irreducible h")
    return rst_member(x, block)


def _eta(h1, h2) -> bool:
    b1, b2 = irreducible_block(h1), irreducible_block(h2)
    return b1 is not None and b2 is not None and b2.contains(b1)


def _chi(h1, h2, G) -> bool:
    b1, b2 = irreducible_block(h1), irreducible_block(h2)
    if b1 is None or b2 is None:
        return False
    _, _, join, _, _ = model_ops(G)
    try:
        below = join(h1, h2) == h2 and h1 != h2
    except RepresentabilityError:
        return False
    nested = b2.contains(b1) and b1 != b2
    covering = nested and spine(G).covers(b2.level, b1.level)
    # rst(b1) holds h1 itself, so (E x != 1) gamma(h1, x) is automatic
    return below and covering


def relation_oracles(h1, h2, G) -> Dict[str, bool]:
    b1, b2 = irreducible_block(h1), irreducible_block(h2)
    if b1 is None or b2 is None:
        raise PreconditionError("relation_oracles needs irreducible arguments")
    eta = b2.contains(b1)
    eta_rev = b1.contains(b2)
    return {
        "eta": eta,
        "eta_rev": eta_rev,
        "mu": b1 == b2,
        "vartheta": eta and not eta_rev,
        "chi": _chi(h1, h2, G),
    }


def oracle_pred(name: str, args: Sequence, G) -> Optional[bool]:
    """Exact value of a named formula, or None when no oracle applies."""
    if name == "B":
        return irreducible_block(args[0]) is not None
    if name == "gamma":
        return gamma_semantic(args[0], args[1], G)
    if name == "eta":
        return _eta(args[0], args[1])
    if name == "vartheta":
        return _eta(args[0], args[1]) and not _eta(args[1], args[0])
    if name == "mu":
        return _gamma_set(args[0], G) == _gamma_set(args[1], G)
    if name == "chi":
        return _chi(args[0], args[1], G)
    return None


def conjugate_containment(h, h2, G, budget: SearchBudget = SearchBudget()) -> TruthValue:
    """Search for ``g`` with rst of the block of ``h^g`` strictly inside that of ``h2``.

    A witness proves the reading true.  Blocks at the same or a coarser
    level can never be moved strictly inside, which proves it false.
    """
    b, b2 = irreducible_block(h), irreducible_block(h2)
    if b is None or b2 is None:
        raise PreconditionError("needs irreducible arguments")
    if b.level <= b2.level:
        return TruthValue(False, (("reason", "level not finer"),))
    for g in enumerate_elements(G, budget):
        moved = b if isinstance(g, PLMap) else OBlock(b.level, g.apply(b.prefix))
        if b2.contains(moved):
            return TruthValue(True, (("g", g),))
    return UNKNOWN


def block_containment(h, h2) -> bool:
    """The plain containment reading: the block of ``h`` sits strictly inside that of ``h2``."""
    b, b2 = irreducible_block(h), irreducible_block(h2)
    if b is None or b2 is None:
        raise PreconditionError("needs irreducible arguments")
    return b2.contains(b) and b != b2


# -- symbolic words ----------------------------------------------------------------------

@dataclass(frozen=True)
class Sym:
    """A universally quantified variable left unevaluated."""
    name: str


class _Undetermined(Exception):
    pass


def _reduce(word: list, G) -> list:
    mul, _, _, _, is_id = model_ops(G)
    out: list = []
    for letter in word:
        if letter[0] == "c":
            if is_id(letter[1]):
                continue
            if out and out[-1][0] == "c":
                v = mul(out[-1][1], letter[1])
                out.pop()
                if not is_id(v):
                    out.append(("c", v))
                continue
        elif out and out[-1][0] == "s" and out[-1][1] == letter[1] and out[-1][2] == -letter[2]:
            out.pop()
            continue
        out.append(letter)
    return out


def _invert_word(word: list, G) -> list:
    inv = model_ops(G)[1]
    return [("c", inv(l[1])) if l[0] == "c" else ("s", l[1], -l[2]) for l in reversed(word)]


# -- evaluator -----------------------------------------------------------------------------

def _cost(f) -> int:
    if isinstance(f, (Eq1, Neq1)):
        return 0
    if isinstance(f, Pred):
        return 4
    if isinstance(f, (And, Or, Implies)):
        return _cost(f.left) + _cost(f.right)
    if isinstance(f, Not):
        return _cost(f.arg)
    return 10 + _cost(f.body)


class Evaluator:
    def __init__(self, G, budget: SearchBudget = SearchBudget(), mode: str = "oracle"):
        if mode not in ("syntactic", "oracle"):
            raise ValueError(f"unknown mode {mode!r}")
        self.G = G
        self.budget = budget
        self.mode = mode
        self.ops = model_ops(G)
        self.elements = list(enumerate_elements(G, budget))
        self.abelian = not is_pl_model(G) and model_kinds(G) == ("Z",)
        self._memo: Dict = {}

    # terms
    def term(self, t, env):
        if isinstance(t, Var):
            return env[t.name]
        if isinstance(t, One):
            return self.G.identity()
        mul, inv, join, meet, _ = self.ops
        if isinstance(t, Inv):
            v = self.term(t.arg, env)
            return Sym_inv(v, self) if _symbolic(v) else inv(v)
        a, b = self.term(t.left, env), self.term(t.right, env)
        if isinstance(t, Mul):
            if _symbolic(a) or _symbolic(b):
                return _Word(_reduce(_letters(a) + _letters(b), self.G))
            return mul(a, b)
        if _symbolic(a) or _symbolic(b):
            raise _Undetermined()
        return join(a, b) if isinstance(t, Join) else meet(a, b)

    def is_one(self, t, env) -> Optional[bool]:
        try:
            v = self.term(t, env)
        except _Undetermined:
            return None
        except RepresentabilityError:
            return None
        if _symbolic(v):
            letters = _letters(v)
            if not letters:
                return True
            if self.abelian:
                total, syms = 0, {}
                for l in letters:
                    if l[0] == "c":
                        total += l[1].defaults[0]
                    else:
                        syms[l[1]] = syms.get(l[1], 0) + l[2]
                if total == 0 and not any(syms.values()):
                    return True
            return None
        return self.ops[4](v)

    # formulas
    def eval(self, f, env, depth: int = 0) -> TruthValue:
        if isinstance(f, Eq1):
            r = self.is_one(f.term, env)
            return UNKNOWN if r is None else (TRUE if r else FALSE)
        if isinstance(f, Neq1):
            r = self.is_one(f.term, env)
            return UNKNOWN if r is None else (FALSE if r else TRUE)
        if isinstance(f, Not):
            return self.eval(f.arg, env, depth).negate()
        if isinstance(f, And):
            return self._and(f.left, f.right, env, depth)
        if isinstance(f, Or):
            return self._or([(f.left, False), (f.right, False)], env, depth)
        if isinstance(f, Implies):
            return self._or([(f.left, True), (f.right, False)], env, depth)
        if isinstance(f, Pred):
            return self._pred(f, env, depth)
        return self._quant(f, env, depth)

    def _and(self, a, b, env, depth) -> TruthValue:
        unknown = False
        for g in sorted((a, b), key=_cost):
            v = self.eval(g, env, depth)
            if v.verdict is False:
                return v
            unknown |= v.verdict is None
        return UNKNOWN if unknown else TRUE

    def _or(self, parts, env, depth) -> TruthValue:
        unknown = False
        for g, negated in sorted(parts, key=lambda p: _cost(p[0])):
            v = self.eval(g, env, depth)
            if negated:
                v = v.negate()
            if v.verdict is True:
                return v
            unknown |= v.verdict is None
        return UNKNOWN if unknown else FALSE

    def _pred(self, f: Pred, env, depth) -> TruthValue:
        names = set()
        for a in f.args:
            names |= term_vars(a)
        key = (f, tuple((n, env[n]) for n in sorted(names)), self.budget.depth - depth)
        if key in self._memo:
            return self._memo[key]
        out = None
        if self.mode == "oracle":
            try:
                args = [self.term(a, env) for a in f.args]
            except (_Undetermined, RepresentabilityError):
                args = None
            if args is not None and not any(_symbolic(a) for a in args):
                r = oracle_pred(f.name, args, self.G)
                if r is not None:
                    out = TRUE if r else FALSE
            elif f.name in ("B", "gamma", "eta", "vartheta", "mu", "chi"):
                out = UNKNOWN
        if out is None:
            out = self.eval(unfold(f), env, depth)
        self._memo[key] = out
        return out

    def _quant(self, f, env, depth) -> TruthValue:
        if self.mode == "oracle":
            shortcut = self._relativized_atom(f, env)
            if shortcut is not None:
                return shortcut
        if depth >= self.budget.depth:
            return UNKNOWN
        is_all = isinstance(f, Forall)
        domain = self._domain(f, env)
        unknown = False
        for x in domain:
            v = self.eval(f.body, {**env, f.var: x}, depth + 1)
            if v.verdict is (not is_all):
                return TruthValue(v.verdict, ((f.var, x),) + (v.witness or ()))
            unknown |= v.verdict is None
        if is_all:
            v = self.eval(f.body, {**env, f.var: Sym(f.var)}, depth + 1)
            if v.verdict is True:
                return TruthValue(True, ((f.var, "generic"),))
        return UNKNOWN

    def _domain(self, f, env) -> List:
        """Enumeration, narrowed by ``gamma(h, x)`` guards in oracle mode."""
        if self.mode != "oracle":
            return self.elements
        kind, run, body = type(f), [], f
        while isinstance(body, kind):
            run.append(body.var)
            body = body.body
        if kind is Forall and isinstance(body, Implies):
            guard = body.left
        elif kind is Exists and isinstance(body, And):
            guard = body.left
        else:
            return self.elements
        hs = []
        for g in conjuncts(guard):
            if (isinstance(g, Pred) and g.name == "gamma" and g.args[1] == Var(f.var)
                    and not (term_vars(g.args[0]) & set(run))):
                try:
                    h = self.term(g.args[0], env)
                except (_Undetermined, RepresentabilityError):
                    continue
                if not _symbolic(h):
                    hs.append(h)
        if not hs:
            return self.elements
        return [x for x in self.elements if all(gamma_semantic(h, x, self.G) for h in hs)]

    def _relativized_atom(self, f, env) -> Optional[TruthValue]:
        """Decide ``E h'.(vartheta(h',h) & gamma(h',t))`` and its dual exactly."""
        v = f.var
        if isinstance(f, Exists) and isinstance(f.body, And):
            a, b, negate = f.body.left, f.body.right, False
        elif isinstance(f, Forall) and isinstance(f.body, Implies) and isinstance(f.body.right, Not):
            a, b, negate = f.body.left, f.body.right.arg, True
        else:
            return None
        if not (isinstance(a, Pred) and a.name == "vartheta" and a.args[0] == Var(v)
                and isinstance(b, Pred) and b.name == "gamma" and b.args[0] == Var(v)):
            return None
        if v in term_vars(a.args[1]) or v in term_vars(b.args[1]):
            return None
        try:
            h = self.term(a.args[1], env)
            t = self.term(b.args[1], env)
        except (_Undetermined, RepresentabilityError):
            return None
        if _symbolic(h) or _symbolic(t):
            return None
        found = _smaller_block_holds(h, t, self.G)
        return TruthValue(found != negate, (("rule", "relativized atom"),))


def _smaller_block_holds(h, t, G) -> bool:
    """Is there an irreducible ``h'`` with block strictly inside h's and ``t`` in its rst?"""
    block = irreducible_block(h)
    if block is None:
        return False
    sb = smallest_block(t)
    if sb is None:
        return block.level < len(model_kinds(G)) - 1
    return block.contains(sb) and sb != block


# symbolic helpers

class _Word:
    __slots__ = ("letters",)

    def __init__(self, letters):
        self.letters = letters

    def __eq__(self, other):
        return isinstance(other, _Word) and self.letters == other.letters

    def __hash__(self):
        return hash(tuple((l[0], l[1]) for l in self.letters))


def _symbolic(v) -> bool:
    return isinstance(v, (Sym, _Word))


def _letters(v) -> list:
    if isinstance(v, Sym):
        return [("s", v.name, 1)]
    if isinstance(v, _Word):
        return list(v.letters)
    return [("c", v)]


def Sym_inv(v, ev: Evaluator):
    return _Word(_invert_word(_letters(v), ev.G))


# -- public entry points -------------------------------------------------------------------

def evaluate(f, env: Optional[dict], G, budget: SearchBudget = SearchBudget(), mode: str = "oracle",
             evaluator: Optional[Evaluator] = None) -> TruthValue:
    env = dict(env or {})
    missing = free_vars(f) - set(env)
    if missing:
        raise UnboundVariableError(f"unbound variables: {', '.join(sorted(missing))}")
    ev = evaluator or Evaluator(G, budget, mode)
    return ev.eval(f, env)


eval_formula = evaluate


@dataclass
class CrossReport:
    name: str
    agreements: int = 0
    disagreements: List[tuple] = field(default_factory=list)
    unknowns: int = 0
    oracle_true: int = 0

    @property
    def total(self) -> int:
        return self.agreements + len(self.disagreements) + self.unknowns

    def to_json(self) -> dict:
        return {"name": self.name, "agreements": self.agreements,
                "disagreements": len(self.disagreements), "unknowns": self.unknowns}


_ORACLE_NAMES = ("gamma", "eta", "mu", "vartheta", "chi")


def cross_validate(name: str, assignments: Sequence, G, budget: SearchBudget = SearchBudget()) -> CrossReport:
    """Compare syntactic evaluation of a named formula with its oracle."""
    if name not in _ORACLE_NAMES:
        raise ValueError(f"no oracle for {name!r}")
    ev = Evaluator(G, budget, "syntactic")
    params = ("a", "b")
    f = paper_formula(name, params)
    report = CrossReport(name)
    for args in assignments:
        env = dict(zip(params, args))
        expected = oracle_pred(name, list(args), G)
        report.oracle_true += bool(expected)
        v = ev.eval(f, env)
        if v.verdict is None:
            report.unknowns += 1
        elif v.verdict == expected:
            report.agreements += 1
        else:
            report.disagreements.append((args, v.verdict, expected))
    return report


def component_evaluate(sentence, kind: str, budget: SearchBudget = SearchBudget()) -> TruthValue:
    """Evaluate a sentence on the standalone component of the given kind."""
    from .blocks import _component_decision

    exact = _component_decision(kind, "", sentence, budget)
    if exact is not None:
        return TruthValue(exact, (("rule", "component decision"),))
    return evaluate(sentence, {}, component_group(kind), budget)
