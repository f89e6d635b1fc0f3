"""O-blocks, spines, rigid stabilizers and the per-level invariants of a model.

Blocks of a wreath tower are coordinate cylinders.  ``OBlock(j, q)`` is the
set of points whose first ``j`` coordinates equal ``q``; ``j`` doubles as
the name of the spine level, so level 0 is the top block Omega and larger
levels are smaller blocks.  The one-level PL model has the single block
``OBlock(0, ())``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .pl import PLMap, PLQGroup, PreconditionError, pl_is_irreducible, pl_support
from .wreath import (
    ChainSpec,
    RepresentabilityError,
    WreathElement,
    WreathGroup,
    comp_identity,
    comp_is_identity,
    wr_inv,
    wr_join,
    wr_meet,
    wr_mul,
)


@dataclass(frozen=True, order=True)
class OBlock:
    level: int
    prefix: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if len(self.prefix) != self.level:
            raise ValueError("prefix length must equal the block level")

    @property
    def is_top(self) -> bool:
        return self.level == 0

    def contains(self, other: "OBlock") -> bool:
        return self.level <= other.level and other.prefix[: self.level] == self.prefix

    def contains_point(self, p: Sequence) -> bool:
        return tuple(p[: self.level]) == self.prefix

    def to_json(self) -> dict:
        return {"level": self.level, "prefix": [str(x) for x in self.prefix]}


TOP = OBlock(0, ())


@dataclass(frozen=True)
class Spine:
    """Spine levels listed smallest congruence first, with component kinds."""

    levels: Tuple[int, ...]
    kinds: Tuple[str, ...]

    @property
    def minimal(self) -> int:
        return self.levels[0]

    @property
    def top(self) -> int:
        return self.levels[-1]

    def kind(self, level: int) -> str:
        return self.kinds[self.levels.index(level)]

    def covers(self, upper: int, lower: int) -> bool:
        """``upper`` is the immediate successor of ``lower``."""
        i = self.levels.index(lower)
        return i + 1 < len(self.levels) and self.levels[i + 1] == upper

    def below(self, a: int, b: int) -> bool:
        """Strict order of congruences: ``a`` is finer than ``b``."""
        return self.levels.index(a) < self.levels.index(b)

    def to_json(self) -> dict:
        return {"levels": [{"level": lv, "kind": k} for lv, k in zip(self.levels, self.kinds)]}


# -- model plumbing -------------------------------------------------------------

def is_pl_model(G) -> bool:
    return isinstance(G, PLQGroup)


def model_kinds(G) -> tuple:
    return ("PLQ",) if is_pl_model(G) else G.spec.levels


def component_group(kind: str):
    """The o-primitive component of the given kind as a standalone model."""
    if kind == "PLQ":
        return PLQGroup()
    return WreathGroup(ChainSpec(("Z",)))


def spine(G) -> Spine:
    kinds = model_kinds(G)
    r = len(kinds)
    return Spine(tuple(range(r - 1, -1, -1)), tuple(reversed(kinds)))


# -- points and blocks ----------------------------------------------------------

def _as_point(p) -> tuple:
    return tuple(p) if isinstance(p, (tuple, list)) else (p,)


def v_of(alpha, beta, G=None) -> int:
    """Spine level of the smallest block containing both points."""
    a, b = _as_point(alpha), _as_point(beta)
    if a == b:
        raise PreconditionError("V(alpha, alpha) is undefined")
    if G is not None and is_pl_model(G):
        return 0
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    raise PreconditionError("points of different arity")


def block_of(alpha, level: int, G=None) -> OBlock:
    return OBlock(level, _as_point(alpha)[:level])


def kappa(block: OBlock) -> int:
    return block.level


def smallest_block(x) -> Optional[OBlock]:
    """Smallest block containing supp(x); None for the identity."""
    if isinstance(x, PLMap):
        return None if x.is_identity() else TOP
    if x.is_identity():
        return None
    if any(x.default_moves(i) for i in range(x.spec.depth)):
        return TOP
    prefixes = [p for _, p, _ in x.nontrivial_entries()]
    lcp = prefixes[0]
    for p in prefixes[1:]:
        n = 0
        while n < min(len(lcp), len(p)) and lcp[n] == p[n]:
            n += 1
        lcp = lcp[:n]
    return OBlock(len(lcp), lcp)


def rst_member(g, block: OBlock) -> bool:
    sb = smallest_block(g)
    return sb is None or block.contains(sb)


def st_member(g, block: OBlock) -> bool:
    if isinstance(g, PLMap):
        return True
    return g.apply(block.prefix) == block.prefix


def q_member(h, block: OBlock) -> bool:
    if not rst_member(h, block):
        return False
    if isinstance(h, PLMap):
        return not h.is_identity()
    kind = h.spec.levels[block.level]
    return not comp_is_identity(kind, h.entry(block.level, block.prefix))


def irreducible_block(h) -> Optional[OBlock]:
    if isinstance(h, PLMap):
        return TOP if pl_is_irreducible(h) else None
    from .wreath import irreducible_block as _wr_block
    return _wr_block(h)


def is_irreducible(h) -> bool:
    return irreducible_block(h) is not None


def origin(G) -> tuple:
    return tuple(0 if k == "Z" else Fraction(0) for k in model_kinds(G))


def standard_bump(kind: str, lo=0, hi=1):
    """Canonical irreducible component element: +1, or a bump on (lo, hi)."""
    if kind == "Z":
        return 1
    lo, hi = Fraction(lo), Fraction(hi)
    w = hi - lo
    return PLMap.bump(lo, lo + w / 2, lo + 3 * w / 4, hi)


def element_at(G, block: OBlock, entry):
    """The element acting by ``entry`` on ``block`` and trivially elsewhere."""
    if is_pl_model(G):
        return entry
    spec = G.spec
    defaults = [comp_identity(k) for k in spec.levels]
    if block.level == 0:
        defaults[0] = entry
        return WreathElement(spec, {}, defaults)
    return WreathElement(spec, {block.prefix: entry}, defaults)


def irreducible_in(G, block: OBlock):
    """A canonical irreducible element of Q for ``block``."""
    return element_at(G, block, standard_bump(model_kinds(G)[block.level]))


def model_ops(G):
    """``(mul, inv, join, meet, is_identity)`` for either model family."""
    if is_pl_model(G):
        return (lambda a, b: a * b, PLMap.inverse, PLMap.join, PLMap.meet, PLMap.is_identity)
    return (wr_mul, wr_inv, wr_join, wr_meet, WreathElement.is_identity)


def commutator(G, a, b):
    mul, inv, _, _, _ = model_ops(G)
    return mul(mul(mul(inv(a), inv(b)), a), b)


def abs_value(G, a):
    _, inv, join, _, _ = model_ops(G)
    return join(a, inv(a))


def leq(G, a, b) -> bool:
    _, _, join, _, _ = model_ops(G)
    return join(a, b) == b


# -- hypothesis flags -----------------------------------------------------------

@dataclass
class HypothesisReport:
    transitive: bool
    ample: bool
    abundant: bool
    dagger: bool
    daggerdagger: bool
    controlled: bool
    has_minimal: bool
    checks: Dict[str, int] = field(default_factory=dict)

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in
                ("transitive", "ample", "abundant", "dagger", "daggerdagger", "controlled", "has_minimal")}


def _sample_blocks(G, elements) -> List[OBlock]:
    blocks = {TOP}
    for x in elements:
        if isinstance(x, WreathElement):
            for i, p, _ in x.nontrivial_entries():
                for j in range(1, i + 1):
                    blocks.add(OBlock(j, p[:j]))
    return sorted(blocks)


def hypothesis_report(G, budget=None) -> HypothesisReport:
    """Flags known by construction, each backed by a sampled sanity check."""
    from .evaluator import SearchBudget, enumerate_elements
    from .wreath import wr_dep

    budget = budget or SearchBudget(max_elements=40, size_bound=2)
    kinds = model_kinds(G)
    sp = spine(G)
    elements = list(enumerate_elements(G, budget))
    blocks = _sample_blocks(G, elements)
    checks = {"dep": 0, "q_nonempty": 0, "dagger": 0, "irreducible": 0, "controlled": 0}

    # abundance: depressions of stabilizing elements stay representable
    if not is_pl_model(G):
        for x in elements:
            for b in blocks:
                if st_member(x, b):
                    try:
                        d = wr_dep(x, b)
                    except RepresentabilityError:
                        continue
                    for p in _probe_points(G, b):
                        assert d.apply(p) == (x.apply(p) if b.contains_point(p) else p)
                    checks["dep"] += 1

    # ample: every sampled block carries an element of Q, and (††): an irreducible one
    for b in blocks:
        h = irreducible_in(G, b)
        assert q_member(h, b) and irreducible_block(h) == b
        checks["q_nonempty"] += 1
        checks["irreducible"] += 1

    # dagger at the minimal level: a non-trivial element inside a small interval
    dagger = kinds[-1] == "PLQ"
    if dagger:
        inner = OBlock(len(kinds) - 1, origin(G)[:-1])
        h = element_at(G, inner, standard_bump("PLQ", Fraction(1, 3), Fraction(1, 2)))
        carrier = pl_support(h if isinstance(h, PLMap) else h.entry(inner.level, inner.prefix))[0]
        assert carrier.components[0].lower >= Fraction(1, 3)
        checks["dagger"] += 1

    # controlled (rst(Gamma) form): every sampled element lies in rst of some block of T
    for x in elements:
        sb = smallest_block(x)
        if sb is not None:
            assert rst_member(x, sb)
            checks["controlled"] += 1

    return HypothesisReport(
        transitive=True,
        ample=True,
        abundant=True,
        dagger=dagger,
        daggerdagger=True,
        controlled=True,
        has_minimal=len(sp.levels) > 0,
        checks=checks,
    )


def _probe_points(G, block: OBlock) -> List[tuple]:
    kinds = model_kinds(G)
    pts = []
    for shift in (-1, 0, 1, 2):
        p = list(block.prefix)
        for i in range(block.level, len(kinds)):
            p.append(shift if kinds[i] == "Z" else Fraction(shift, 2))
        pts.append(tuple(p))
        if block.level > 0:
            q = list(p)
            q[block.level - 1] = q[block.level - 1] + 1
            pts.append(tuple(q))
    return pts


# -- minimal abelian components --------------------------------------------------

@dataclass
class MinimalAbelianResult:
    witness: object
    checked_pairs: int = 0
    counterexamples: List[tuple] = field(default_factory=list)


def _innermost_pair(G, prefix: tuple, lo: Fraction, hi: Fraction, lift: Fraction):
    """Two overlapping innermost bumps inside ``(lo, hi)`` lifting by at most ``lift``."""
    w = (hi - lo) / 4
    d = min(lift / 2, w / 2)
    block = OBlock(len(prefix), prefix)
    a = element_at(G, block, PLMap.bump(lo, lo + w, lo + w + d, lo + 2 * w))
    b = element_at(G, block, PLMap.bump(lo + w, lo + 2 * w, lo + 2 * w + d, lo + 3 * w))
    return a, b


def _counterexample(G, h1):
    """Non-commuting ``a, b`` with ``|a| v |b| <= h1`` below a PLQ-innermost level."""
    r = len(model_kinds(G))
    if isinstance(h1, PLMap):
        moved_entry, prefix = h1, ()
        x0 = next(iter(pl_support(h1)[1])).carrier
    else:
        alpha = _moved_point(h1)
        i = v_of(alpha, h1.apply(alpha))
        prefix = alpha[: r - 1]
        if i < r - 1:
            return _innermost_pair(G, prefix, Fraction(0), Fraction(4), Fraction(1))
        moved_entry = h1.entry(r - 1, prefix)
        x0 = next(b for b in pl_support(moved_entry)[1] if alpha[-1] in b.carrier).carrier
    lo, hi = x0.lower, x0.upper
    c, d = lo + (hi - lo) / 4, hi - (hi - lo) / 4
    pts = [c, d] + [x for x, _ in moved_entry.breakpoints if c < x < d]
    lift = min(moved_entry.apply(x) - x for x in pts)
    return _innermost_pair(G, prefix, c, d, lift)


def _moved_point(h1: WreathElement) -> tuple:
    kinds = h1.spec.levels
    entries = list(h1.nontrivial_entries())
    if entries:
        _, p, e = entries[0]
        base = list(p)
    else:
        base, e = [], None
    i = len(base)
    # pick a coordinate moved at the entry's level, zeros elsewhere
    if e is None:
        i = next(k for k in range(len(kinds)) if h1.default_moves(k))
        base = [0 if kinds[k] == "Z" else Fraction(0) for k in range(i)]
        e = h1.defaults[i]
    if kinds[i] == "Z":
        x = 0
    else:
        x = _moved_coordinate(e)
    rest = [0 if kinds[k] == "Z" else Fraction(0) for k in range(i + 1, len(kinds))]
    return tuple(base + [x] + rest)


def _moved_coordinate(f: PLMap) -> Fraction:
    carrier = pl_support(f)[1][0].carrier
    return (carrier.lower + carrier.upper) / 2


def _below(G, a, h1) -> bool:
    try:
        return leq(G, abs_value(G, a), h1)
    except RepresentabilityError:
        return False


def minimal_abelian(G, budget=None) -> MinimalAbelianResult:
    """Look for ``h1 > 1`` all of whose small elements commute.

    For a Z innermost level the witness is the innermost +1 at the origin
    and every enumerated pair under it is checked.  For a PLQ innermost level
    the result has no witness; instead a non-commuting pair is built below
    each enumerated candidate.
    """
    from .evaluator import SearchBudget, enumerate_elements

    budget = budget or SearchBudget(max_elements=40, size_bound=2)
    kinds = model_kinds(G)
    mul, inv, join, _, is_id = model_ops(G)
    one = G.identity()
    if kinds[-1] == "Z":
        r = len(kinds)
        h1 = irreducible_in(G, OBlock(r - 1, origin(G)[: r - 1]))
        elements = list(enumerate_elements(G, budget))
        small = [a for a in elements if _below(G, a, h1)]
        checked = 0
        for a in small:
            for b in small:
                if not is_id(commutator(G, a, b)):
                    raise AssertionError(f"{a} and {b} lie below {h1} but do not commute")
                checked += 1
        return MinimalAbelianResult(h1, checked)
    result = MinimalAbelianResult(None)
    for h1 in enumerate_elements(G, budget):
        if is_id(h1) or join(h1, one) != h1:
            continue
        try:
            a, b = _counterexample(G, h1)
        except RepresentabilityError:
            continue
        bound = join(abs_value(G, a), abs_value(G, b))
        assert leq(G, bound, h1), (h1, a, b)
        assert not is_id(commutator(G, a, b))
        result.counterexamples.append((h1, a, b))
    return result


# -- coloured chains ----------------------------------------------------------------

DEFAULT_BATTERY = {
    "abelian": "A f,g. [f,g] = 1",
    "nc": "E g. (g > 1 & A h. (h > 1 -> meet(g,h) > 1))",
    "nontrivial": "E g. g > 1",
}


@dataclass
class ColouredChain:
    spine: Spine
    colours: Tuple[Dict[str, bool], ...]

    def __post_init__(self):
        for level, c in zip(self.spine.levels, self.colours):
            if not c:
                raise ValueError(f"level {level} has no definite colour")

    def to_json(self) -> dict:
        return {"levels": [{"level": lv, "kind": k, "colours": dict(c)}
                           for lv, k, c in zip(self.spine.levels, self.spine.kinds, self.colours)]}


def _component_decision(kind: str, name: str, sentence, budget):
    """Exact answers for the battery on a component, else None."""
    from .formula import alpha_eq, parse

    if alpha_eq(sentence, parse(DEFAULT_BATTERY["abelian"])):
        if kind == "Z":
            return True
    if alpha_eq(sentence, parse(DEFAULT_BATTERY["nc"])):
        if kind == "Z":
            from .constructions import example_nc_decide
            return example_nc_decide(ChainSpec(("Z",)))[0]
        # bounded carriers: a bump beyond supp(g) meets g trivially
        return False
    return None


def coloured_chain(G, battery=None, budget=None) -> ColouredChain:
    from .evaluator import SearchBudget, evaluate
    from .formula import parse

    battery = DEFAULT_BATTERY if battery is None else battery
    budget = budget or SearchBudget(max_elements=30, size_bound=2)
    sp = spine(G)
    colours = []
    for kind in sp.kinds:
        comp = component_group(kind)
        c = {}
        for name, text in battery.items():
            sentence = parse(text) if isinstance(text, str) else text
            exact = _component_decision(kind, name, sentence, budget)
            if exact is not None:
                c[name] = exact
                continue
            tv = evaluate(sentence, {}, comp, budget)
            if tv.verdict is not None:
                c[name] = tv.verdict
        colours.append(c)
    return ColouredChain(sp, tuple(colours))
