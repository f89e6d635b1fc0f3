"""Explicit witness constructions.

* :func:`lemma31_witnesses` builds ``f`` and ``k`` whose commutator words do
  not commute, for disjointly supported conjugates in the PL model.
* :func:`example_nc_decide` decides the sentence "some g > 1 meets every
  h > 1 non-trivially" on finite Z towers.
* :func:`spine_order_props` reports order properties of the spine and
  spot-checks them through the covering relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .blocks import (
    OBlock,
    element_at,
    irreducible_in,
    model_kinds,
    model_ops,
    spine,
    standard_bump,
)
from .evaluator import SearchBudget, enumerate_elements, evaluate, oracle_pred, _gamma_set
from .formula import parse
from .order import IntervalSet
from .pl import PLMap, PreconditionError, pl_interpolate, pl_support
from .wreath import ChainSpec, RepresentabilityError, WreathElement, WreathGroup, comp_identity


class UnsupportedSpecError(ValueError):
    pass


# -- commutator witnesses ------------------------------------------------------------------------

def _comm(a: PLMap, b: PLMap) -> PLMap:
    return a.inverse() * b.inverse() * a * b


@dataclass
class Lemma31Instance:
    h: PLMap
    g: PLMap
    f: PLMap
    k: PLMap
    w1: PLMap
    w2: PLMap
    check_point: Fraction
    case: str = "direct"

    @property
    def lhs(self) -> Fraction:
        """The check point pushed through ``w1`` then ``w2``."""
        return (self.w1 * self.w2).apply(self.check_point)

    @property
    def rhs(self) -> Fraction:
        return (self.w2 * self.w1).apply(self.check_point)

    def verify(self) -> bool:
        return self.lhs != self.rhs and self.w1 * self.w2 != self.w2 * self.w1

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "h": self.h.to_json(), "g": self.g.to_json(),
            "f": self.f.to_json(), "k": self.k.to_json(),
            "w1": self.w1.to_json(), "w2": self.w2.to_json(),
            "check_point": str(self.check_point),
            "lhs": str(self.lhs), "rhs": str(self.rhs),
            "verified": self.verify(),
        }


def _reflect(f: PLMap) -> PLMap:
    """Conjugate by the order-reversing map ``x -> -x``."""
    return PLMap((-x, -y) for x, y in f.breakpoints)


def _direct(h: PLMap, g: PLMap, lo: Fraction, hi: Fraction):
    """Up-bump of ``h`` on ``(lo, hi)`` whose image under ``g`` lies to the right."""
    H2 = h.conj(g)
    hinv, H2inv = h.inverse(), H2.inverse()
    lo2, hi2 = g.apply(lo), g.apply(hi)

    gamma = (lo2 + hi2) / 2
    mu = H2.apply(H2.apply(H2.apply(gamma)))
    m = H2inv.apply(mu)
    delta = m + (mu - m) / 3
    lam = m + 2 * (mu - m) / 3

    alpha = (lo + hi) / 2
    beta = (hinv.apply(alpha) + alpha) / 2
    xi1 = gamma
    xi2 = H2.apply(H2.apply(xi1))
    k = pl_interpolate(
        [beta, alpha, xi1, H2.apply(xi1), xi2, H2.apply(xi2)],
        [gamma, H2.apply(gamma), m, delta, mu, H2.apply(lam)],
    )

    z = alpha
    d = h.apply(z) - z
    zetas = [z, z + d / 4, z + d / 2, z + 3 * d / 4]
    h2inv, h3inv = hinv * hinv, hinv * hinv * hinv
    f = pl_interpolate(
        zetas + [h.apply(x) for x in zetas],
        [h3inv.apply(beta), h3inv.apply(alpha), h2inv.apply(beta), h2inv.apply(alpha),
         H2inv.apply(gamma), gamma, delta, lam],
    )
    return f, k, lam


def lemma31_witnesses(h: PLMap, g: PLMap) -> Lemma31Instance:
    supp_h = pl_support(h)[0]
    H2 = h.conj(g)
    supp_h2 = pl_support(H2)[0]
    if not supp_h or not supp_h2:
        raise PreconditionError("h must be non-trivial")
    if supp_h.intersect(supp_h2) != IntervalSet():
        raise PreconditionError("supp(h) and supp(h^g) overlap")
    bump = pl_support(h)[1][0]
    lo, hi = bump.carrier.lower, bump.carrier.upper
    f, k, lam, case = _solve(h, g, lo, hi, bump.direction)
    w1 = _comm(h.inverse(), h.conj(f))
    w2 = _comm(H2.inverse(), H2.conj(k))
    inst = Lemma31Instance(h, g, f, k, w1, w2, lam, case)
    assert inst.verify(), "construction failed to separate the commutators"
    return inst


def _solve(h, g, lo, hi, direction):
    if direction == "down":
        f, k, lam, case = _solve(_reflect(h), _reflect(g), -hi, -lo, "up")
        return _reflect(f), _reflect(k), -lam, case + "+reflected"
    if g.apply(lo) > lo:
        f, k, lam = _direct(h, g, lo, hi)
        return f, k, lam, "direct"
    # the image block lies to the left: swap the roles of h and h^g
    h2, ginv = h.conj(g), g.inverse()
    fp, kp, lam = _direct(h2, ginv, g.apply(lo), g.apply(hi))
    return kp, fp, lam, "mirror"


def random_admissible_pair(rng, direction: Optional[str] = None, side: Optional[str] = None):
    """A bump-ish ``h`` and a shift ``g`` with supp(h) and supp(h^g) disjoint."""
    direction = direction or rng.choice(["up", "down"])
    side = side or rng.choice(["right", "left"])
    lo = Fraction(rng.randint(-20, 20), rng.randint(1, 4))
    w = Fraction(rng.randint(1, 12), rng.randint(1, 3))
    hi = lo + w
    px = lo + w * Fraction(rng.randint(1, 9), 10)
    if direction == "up":
        py = px + (hi - px) * Fraction(rng.randint(1, 9), 10)
    else:
        py = px - (px - lo) * Fraction(rng.randint(1, 9), 10)
    h = PLMap.bump(lo, px, py, hi)
    if rng.random() < 0.3:
        lo2 = hi + Fraction(rng.randint(1, 5), 2)
        h = h * PLMap.bump(lo2, lo2 + 1, lo2 + Fraction(3, 2), lo2 + 2)
    L, U = h.carrier
    shift = (U - L) + Fraction(rng.randint(1, 10), rng.randint(1, 3))
    if side == "left":
        shift = -shift
    g = pl_interpolate([L, U], [L + shift, U + shift])
    return h, g


# -- Example nc ------------------------------------------------------------------------

NC_SENTENCE = "E g. (g > 1 & A h. (h > 1 -> meet(g,h) > 1))"


@dataclass
class NcResult:
    verdict: bool
    witness: Optional[object] = None
    refutations: List[dict] = field(default_factory=list)
    bounded: Optional[bool] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_json(),
            "refutations": [
                {"g": r["g"].to_json(), "h": r["h"].to_json(), "lifted": r["lifted"]}
                for r in self.refutations
            ],
            "bounded_evaluation": self.bounded,
            "note": self.note,
        }


def _positive(G, x) -> bool:
    _, _, join, _, is_id = model_ops(G)
    return not is_id(x) and join(x, G.identity()) == x


def _lift(g: WreathElement) -> WreathElement:
    """Place ``g`` in the block at top coordinate 0 of a tower one level taller."""
    spec = ChainSpec(("Z",) + g.spec.levels, "restricted")
    over = {(0,): g.defaults[0]}
    for i, lv in enumerate(g.overrides):
        for p, e in lv.items():
            over[(0,) + p] = e
    return WreathElement(spec, over)


def _disjoint_partner(g: WreathElement):
    """``h > 1`` moving only a level-1 block that ``g`` leaves alone."""
    spec = g.spec
    tops = {p[0] for _, p, _ in g.nontrivial_entries() if p}
    c = max(tops) + 1 if tops else 0
    return WreathElement(spec, {(c,): 1})


def example_nc_decide(spec: ChainSpec, budget: SearchBudget = SearchBudget(max_elements=30, depth=2)):
    """Decide the nc sentence on a finite Z tower and return the evidence.

    A restricted tower with two or more levels is read as a window into the
    infinite tower: an element translating the top coordinate is placed
    inside one top block of a tower one level taller before its partner is
    built.
    """
    if any(k != "Z" for k in spec.levels):
        raise UnsupportedSpecError("the nc decision procedure handles Z towers only")
    G = WreathGroup(spec)
    _, _, _, meet, _ = model_ops(G)
    r = spec.depth
    result: NcResult
    if r == 1 or spec.mode == "default":
        if r == 1:
            g = G.element({(): 1})
            note = "a positive translation of Z meets every positive translation in a positive one"
        else:
            defaults = [comp_identity(k) for k in spec.levels]
            defaults[1] = 1
            g = G.element({}, defaults)
            note = "g moves every point up, so g ^ h moves every point that h moves"
        result = NcResult(True, g, note=note)
        for h in enumerate_elements(G, budget):
            if _positive(G, h):
                try:
                    m = meet(g, h)
                except RepresentabilityError:
                    continue
                assert _positive(G, m), (g, h)
    else:
        result = NcResult(False, note="every g > 1 has a disjointly supported h > 1")
        for g in enumerate_elements(G, budget):
            if not _positive(G, g):
                continue
            lifted = g.default_moves(0)
            gg = _lift(g) if lifted else g
            h = _disjoint_partner(gg)
            H = WreathGroup(gg.spec)
            assert _positive(H, h) and model_ops(H)[3](gg, h).is_identity()
            result.refutations.append({"g": gg, "h": h, "lifted": lifted})
    tv = evaluate(parse(NC_SENTENCE), {}, G, budget)
    result.bounded = tv.verdict
    if tv.verdict is not None and tv.verdict != result.verdict:
        raise AssertionError("bounded evaluation contradicts the decision")
    return result.verdict, result


# -- spine order properties ---------------------------------------------------------------

def _nested_pair(G, upper: int, lower: int):
    """Irreducibles ``h1`` at level ``lower`` inside the block of ``h2`` at ``upper``, h1 < h2."""
    kinds = model_kinds(G)
    inside = [0 if k == "Z" else Fraction(1, 2) for k in kinds]
    h2 = irreducible_in(G, OBlock(upper, tuple(inside[:upper])))
    b1 = OBlock(lower, tuple(inside[:lower]))
    h1 = element_at(G, b1, standard_bump(kinds[lower]))
    return h1, h2


def spine_order_props(G) -> dict:
    sp = spine(G)
    checks = []
    # top block: an irreducible whose gamma-set is the whole group
    h0 = irreducible_in(G, OBlock(0, ()))
    top = _gamma_set(h0, G) == ("all",)
    succ, pred = True, True
    for lvl in sp.levels:
        if lvl != sp.top:
            h1, h2 = _nested_pair(G, lvl - 1, lvl)
            ok = bool(oracle_pred("chi", [h1, h2], G))
            checks.append({"lower": lvl, "upper": lvl - 1, "chi": ok, "expected": True})
            succ &= ok
        if lvl == sp.minimal:
            pred = False  # nothing finer exists to cover from below
        else:
            h1, h2 = _nested_pair(G, lvl, lvl + 1)
            pred &= bool(oracle_pred("chi", [h1, h2], G))
    for lvl in sp.levels:
        if lvl - 2 >= 0:
            h1, h2 = _nested_pair(G, lvl - 2, lvl)
            ok = bool(oracle_pred("chi", [h1, h2], G))
            checks.append({"lower": lvl, "upper": lvl - 2, "chi": ok, "expected": False})
    return {
        "top_in_spine": top,
        "all_have_successor": succ,
        "all_have_predecessor": pred,
        "controlled": True,
        "checks": checks,
    }
