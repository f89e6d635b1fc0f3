"""The acceptance suite: one function per criterion, shared by tests and the CLI."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .blocks import (
    OBlock,
    abs_value,
    commutator,
    element_at,
    irreducible_block,
    leq,
    minimal_abelian,
    model_kinds,
    model_ops,
    standard_bump,
)
from .constructions import example_nc_decide, lemma31_witnesses, random_admissible_pair
from .ef import ef_brute_force, ef_equiv
from .evaluator import (
    Evaluator,
    SearchBudget,
    block_containment,
    component_evaluate,
    evaluate,
    gamma_oracle,
    oracle_pred,
)
from .formula import MACROS, alpha_eq, paper_formula, parse, print_formula, relativize
from .pl import PLQGroup
from .sampling import random_element, random_irreducible, random_points
from .wreath import ChainSpec, RepresentabilityError, WreathGroup


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    failures: List[str] = field(default_factory=list)

    def line(self, timing: bool = True) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"; {self.seconds:.2f}s" if timing else ""
        return f"[{mark}] criterion {self.number}: {self.title} ({self.detail}{tail})"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "failures": self.failures[:10]}


def _models() -> Dict[str, object]:
    return {
        "PLQ": PLQGroup(),
        "ZwrZ": WreathGroup(ChainSpec(("Z", "Z"))),
        "PLQwrPLQ": WreathGroup(ChainSpec(("PLQ", "PLQ"))),
        "Z^3": WreathGroup(ChainSpec(("Z", "Z", "Z"))),
    }


# -- 1 -------------------------------------------------------------------------------

def criterion_1(seed: int = 0, samples: int = 200) -> CriterionResult:
    t = time.perf_counter()
    bad: List[str] = []
    for name, G in _models().items():
        rng = random.Random(f"{seed}-{name}")
        mul, inv, join, meet, is_id = model_ops(G)
        one = G.identity()
        for _ in range(samples):
            f, g, h, k = (random_element(G, rng) for _ in range(4))
            try:
                if mul(mul(h, join(f, g)), k) != join(mul(mul(h, f), k), mul(mul(h, g), k)):
                    bad.append(f"{name}: join distributivity")
                if mul(mul(h, meet(f, g)), k) != meet(mul(mul(h, f), k), mul(mul(h, g), k)):
                    bad.append(f"{name}: meet distributivity")
                a = abs_value(G, g)
            except RepresentabilityError:
                continue
            if not leq(G, one, a) or is_id(a) != is_id(g):
                bad.append(f"{name}: |g| contract")
            for p in random_points(G, rng, 3):
                if G.apply(a, p) < p:
                    bad.append(f"{name}: |g| moves {p} down")
    return CriterionResult(1, "l-group laws", not bad, f"{samples} samples x 4 models, {len(bad)} violations",
                           time.perf_counter() - t, bad)


# -- 2 -------------------------------------------------------------------------------

def criterion_2(seed: int = 0, n_h: int = 20, n_x: int = 50) -> CriterionResult:
    t = time.perf_counter()
    bad: List[str] = []
    definite = total = 0
    f = paper_formula("gamma", ["h", "x"])
    budget = SearchBudget(max_elements=12, size_bound=2, seed=seed, depth=2)
    for name, spec in (("PLQwrPLQ", ("PLQ", "PLQ")), ("ZwrZ", ("Z", "Z"))):
        G = WreathGroup(ChainSpec(spec))
        rng = random.Random(f"{seed}-{name}")
        ev = Evaluator(G, budget, "syntactic")
        for i in range(n_h // 2):
            h = random_irreducible(G, rng, i % 2)
            xs = [G.identity(), h] + [random_element(G, rng) for _ in range(n_x - 2)]
            for x in xs:
                total += 1
                v = ev.eval(f, {"h": h, "x": x})
                if v.verdict is None:
                    continue
                definite += 1
                if v.verdict != gamma_oracle(h, x, G):
                    bad.append(f"{name}: h={h} x={x}")
    return CriterionResult(2, "double centralizer", not bad,
                           f"{definite}/{total} definite, {len(bad)} disagreements",
                           time.perf_counter() - t, bad)


# -- 3 and 4 ---------------------------------------------------------------------------

def _tower_irreducibles(seed: int, n: int):
    """Irreducibles of the 3-level Z tower on a small prefix grid so blocks repeat."""
    G = WreathGroup(ChainSpec(("Z", "Z", "Z")))
    rng = random.Random(f"{seed}-tower")
    out = []
    for _ in range(n):
        level = rng.randrange(3)
        prefix = tuple(rng.randint(0, 1) for _ in range(level))
        out.append(element_at(G, OBlock(level, prefix), rng.randint(1, 3)))
    return G, out


def criterion_3(seed: int = 0, n: int = 50) -> CriterionResult:
    t = time.perf_counter()
    G, hs = _tower_irreducibles(seed, n)
    bad: List[str] = []
    for a in hs:
        for b in hs:
            ba, bb = irreducible_block(a), irreducible_block(b)
            eta_ab = oracle_pred("eta", [a, b], G)
            if eta_ab != bb.contains(ba):
                bad.append(f"eta({a},{b})")
            if (eta_ab and oracle_pred("eta", [b, a], G)) != (ba == bb):
                bad.append(f"partition({a},{b})")
            if oracle_pred("vartheta", [a, b], G) != block_containment(a, b):
                bad.append(f"vartheta({a},{b})")
    classes = len({irreducible_block(h) for h in hs})
    return CriterionResult(3, "interpretation of blocks", not bad,
                           f"{n} irreducibles in {classes} blocks, {len(bad)} disagreements",
                           time.perf_counter() - t, bad)


def criterion_4(seed: int = 0, n: int = 50) -> CriterionResult:
    t = time.perf_counter()
    G, hs = _tower_irreducibles(seed, n)
    bad: List[str] = []
    hits = 0
    for a in hs:
        for b in hs:
            ba, bb = irreducible_block(a), irreducible_block(b)
            expected = ba.level == bb.level + 1 and bb.contains(ba)
            got = oracle_pred("chi", [a, b], G)
            hits += got
            if got != expected:
                bad.append(f"chi({a},{b}) = {got}")
    return CriterionResult(4, "covering formula", not bad,
                           f"{n * n} pairs, {hits} covering, {len(bad)} disagreements",
                           time.perf_counter() - t, bad)


# -- 5 -------------------------------------------------------------------------------

def criterion_5(seed: int = 0, n: int = 25) -> CriterionResult:
    t = time.perf_counter()
    rng = random.Random(seed)
    bad: List[str] = []
    cases = set()
    slowest = 0.0
    for i in range(n):
        # pin the first four draws so every seed covers each case
        direction = ("up", "down")[i % 2] if i < 4 else None
        side = ("right", "left")[i // 2 % 2] if i < 4 else None
        h, g = random_admissible_pair(rng, direction, side)
        s = time.perf_counter()
        try:
            inst = lemma31_witnesses(h, g)
            ok = inst.verify()
            cases.add(inst.case)
        except AssertionError:
            ok = False
        slowest = max(slowest, time.perf_counter() - s)
        if not ok:
            bad.append(f"h={h} g={g}")
    passed = not bad and slowest < 1.0 and any(c.startswith("mirror") for c in cases)
    return CriterionResult(5, "commutator witnesses", passed,
                           f"{n - len(bad)}/{n} separated, cases {sorted(cases)}, slowest {slowest:.3f}s",
                           time.perf_counter() - t, bad)


# -- 6 -------------------------------------------------------------------------------

ABELIAN = "A f,g. [f,g] = 1"
ABELIAN_RELATIVIZED = (
    "A f,g. ((gamma(h,f) & gamma(h,g)) -> E h'. (vartheta(h',h) & gamma(h',[f,g])))"
)


def criterion_6(seed: int = 0, per_level: int = 10) -> CriterionResult:
    t = time.perf_counter()
    sigma = parse(ABELIAN)
    rel = relativize(sigma, "h")
    bad: List[str] = []
    if not alpha_eq(rel, parse(ABELIAN_RELATIVIZED)):
        bad.append("relativize(abelian) differs from the displayed form")
    budget = SearchBudget(max_elements=20, size_bound=2, seed=seed, depth=3)
    tally = {}
    for levels in (("Z", "PLQ"), ("PLQ", "Z")):
        G = WreathGroup(ChainSpec(levels))
        rng = random.Random(f"{seed}-{levels}")
        for level, kind in enumerate(levels):
            expected = component_evaluate(sigma, kind, budget).verdict
            agree = 0
            for _ in range(per_level):
                h = random_irreducible(G, rng, level)
                got = evaluate(rel, {"h": h}, G, budget).verdict
                if got == expected:
                    agree += 1
                else:
                    bad.append(f"{'wr'.join(levels)} level {level} ({kind}): got {got}, component says {expected}")
            tally[f"{'wr'.join(levels)}@{level}"] = agree
    detail = ", ".join(f"{k} {v}/{per_level}" for k, v in tally.items())
    return CriterionResult(6, "relativization", not bad, detail, time.perf_counter() - t, bad)


# -- 7 -------------------------------------------------------------------------------

def criterion_7(seed: int = 0) -> CriterionResult:
    t = time.perf_counter()
    bad: List[str] = []
    budget = SearchBudget(max_elements=30, size_bound=2, seed=seed, depth=2)
    notes = []
    for mode, expected in (("default", True), ("restricted", False)):
        try:
            verdict, res = example_nc_decide(ChainSpec(("Z", "Z"), mode), budget)
        except AssertionError as exc:
            bad.append(f"{mode}: {exc}")
            continue
        if verdict != expected:
            bad.append(f"{mode}: verdict {verdict}")
        if not expected:
            G = WreathGroup(ChainSpec(("Z", "Z")))
            for r in res.refutations:
                H = G if not r["lifted"] else WreathGroup(r["g"].spec)
                if not model_ops(H)[3](r["g"], r["h"]).is_identity():
                    bad.append(f"g ^ h != 1 for {r['g']}")
            notes.append(f"{len(res.refutations)} refutations")
        notes.append(f"{mode}={verdict} (bounded {res.bounded})")
    return CriterionResult(7, "Example nc", not bad, ", ".join(notes), time.perf_counter() - t, bad)


# -- 8 -------------------------------------------------------------------------------

def criterion_8(seed: int = 0) -> CriterionResult:
    t = time.perf_counter()
    bad = [f"({m},{n},{k})" for k in range(4) for m in range(11) for n in range(11)
           if ef_equiv(m, n, k) != ef_brute_force(m, n, k)]
    if not ef_equiv(7, 8, 3):
        bad.append("7 vs 8 at rank 3")
    if ef_equiv(2, 3, 2):
        bad.append("2 vs 3 at rank 2")
    secs = time.perf_counter() - t
    return CriterionResult(8, "EF equivalence", not bad and secs < 10,
                           f"{11 * 11 * 4} triples, {len(bad)} mismatches", secs, bad)


# -- 9 -------------------------------------------------------------------------------

def criterion_9(seed: int = 0) -> CriterionResult:
    t = time.perf_counter()
    budget = SearchBudget(max_elements=40, size_bound=2, seed=seed)
    bad: List[str] = []
    notes = []
    zz = WreathGroup(ChainSpec(("Z", "Z")))
    res = minimal_abelian(zz, budget)
    if res.witness is None:
        bad.append("ZwrZ: no witness")
    notes.append(f"ZwrZ witness with {res.checked_pairs} pairs")
    for name, G in (("PLQ", PLQGroup()), ("PLQwrPLQ", WreathGroup(ChainSpec(("PLQ", "PLQ"))))):
        res = minimal_abelian(G, budget)
        if res.witness is not None:
            bad.append(f"{name}: spurious witness")
        if not res.counterexamples:
            bad.append(f"{name}: no counterexamples")
        for h1, a, b in res.counterexamples:
            if not (leq(G, abs_value(G, a), h1) and leq(G, abs_value(G, b), h1)):
                bad.append(f"{name}: pair not below {h1}")
            if model_ops(G)[4](commutator(G, a, b)):
                bad.append(f"{name}: pair commutes")
        notes.append(f"{name} {len(res.counterexamples)} counterexamples")
    return CriterionResult(9, "minimal abelian detection", not bad, ", ".join(notes),
                           time.perf_counter() - t, bad)


# -- 10 ------------------------------------------------------------------------------

EXTRA_FORMULAS = (
    "A f,g. [f,g] = 1",
    "E g. (g > 1 & A h. (h > 1 -> meet(g,h) > 1))",
    "E g. g > 1",
    "A x. (x = 1 | ~x = 1)",
    "E a,b. (join(a,b) != 1 & meet(a,inv(b)) = 1)",
    "A x,y. (x ^ y = x -> [x,y] = 1)",
    "~(E x. x * inv(x) != 1)",
    "A f. (f >= 1 -> join(f,1) = f)",
    "E x. (A y. (y = 1 -> x * y = x) & x != 1)",
    "A p,q,r. ((p > 1 & q > 1) -> (r > 1 | r = 1 | inv(r) > 1))",
    "gamma(h,x) -> B(h)",
    "E t. (chi(t,h) & ~mu(t,h))",
)


def formula_battery() -> List:
    out = []
    for name in MACROS:
        args = [chr(ord("a") + i) for i in range(2)][: 1 if name == "B" else 2]
        out.append(paper_formula(name, args))
        out.append(paper_formula(name, args, expand_all=True))
    out.extend(parse(s) for s in EXTRA_FORMULAS)
    return out


def criterion_10(seed: int = 0) -> CriterionResult:
    t = time.perf_counter()
    bad: List[str] = []
    battery = formula_battery()
    for f in battery:
        text = print_formula(f)
        back = parse(text)
        # parse renames shadowed binders apart, so the text is a fixpoint only from then on
        settled = print_formula(back)
        if not alpha_eq(back, f) or print_formula(parse(settled)) != settled:
            bad.append(text)
    return CriterionResult(10, "parser round trip", not bad and len(battery) >= 30,
                           f"{len(battery)} formulas, {len(bad)} failures", time.perf_counter() - t, bad)


CRITERIA: Dict[int, Callable[..., CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}

# wall-clock ceilings, in seconds
TIME_LIMITS = {1: 5.0, 2: 60.0, 8: 10.0}


def run_suite(seed: int = 0, only=None) -> List[CriterionResult]:
    results = []
    for n, fn in CRITERIA.items():
        if only and n not in only:
            continue
        r = fn(seed)
        limit = TIME_LIMITS.get(n)
        if limit is not None and r.seconds >= limit:
            r.passed = False
            r.failures.append(f"took {r.seconds:.2f}s, limit {limit}s")
        results.append(r)
    return results
