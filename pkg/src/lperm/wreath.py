"""Finite-tower wreath products of Z and PL(Q) acting lexicographically.

Level 0 is the outermost coordinate.  An element stores, for every level
``i``, a finite map from prefixes (the ``i`` outer coordinates) to
component elements together with a per-level default used at all other
prefixes.  Level 0 has a single prefix ``()`` so its entry always lives in
the default slot.  In restricted mode every default below level 0 is the
identity; default-enabled mode allows non-trivial defaults, which is just
enough of the unrestricted product to express "translate every block".

Component elements are ``int`` (a translation of Z) or :class:`PLMap`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .order import ShapeError, lex_compare, rat, rat_to_str
from .pl import PLMap, PreconditionError, pl_restrict, pl_support

KINDS = ("Z", "PLQ")
MODES = ("restricted", "default")


class RepresentabilityError(ValueError):
    """The exact result needs infinitely many overrides."""


# -- component helpers -------------------------------------------------------

def comp_identity(kind: str):
    return 0 if kind == "Z" else PLMap()


def comp_is_identity(kind: str, e) -> bool:
    return e == 0 if kind == "Z" else e.is_identity()


def comp_mul(kind: str, a, b):
    return a + b if kind == "Z" else a * b


def comp_inv(kind: str, a):
    return -a if kind == "Z" else a.inverse()


def comp_apply(kind: str, e, x):
    return x + e if kind == "Z" else e.apply(x)


def comp_join(kind: str, a, b):
    return max(a, b) if kind == "Z" else a.join(b)


def comp_meet(kind: str, a, b):
    return min(a, b) if kind == "Z" else a.meet(b)


def comp_check(kind: str, e):
    if kind == "Z":
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError(f"Z component must be an int, got {e!r}")
    elif not isinstance(e, PLMap):
        raise TypeError(f"PLQ component must be a PLMap, got {e!r}")
    return e


def coord_check(kind: str, x):
    if kind == "Z":
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"Z coordinate must be an int, got {x!r}")
        return x
    return rat(x)


def comp_to_json(kind: str, e):
    return e if kind == "Z" else e.to_json()


def comp_from_json(kind: str, data):
    return int(data) if kind == "Z" else PLMap.from_json(data)


def coord_to_json(kind: str, x):
    return x if kind == "Z" else rat_to_str(x)


def coord_from_json(kind: str, x):
    return int(x) if kind == "Z" else rat(x)


# -- chain spec ---------------------------------------------------------------

@dataclass(frozen=True)
class ChainSpec:
    levels: Tuple[str, ...]
    mode: str = "restricted"

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        if not self.levels:
            raise ValueError("a chain needs at least one level")
        for k in self.levels:
            if k not in KINDS:
                raise ValueError(f"unknown component kind {k!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def depth(self) -> int:
        return len(self.levels)

    def to_json(self) -> dict:
        return {"levels": list(self.levels), "mode": self.mode}

    @classmethod
    def from_json(cls, data: dict) -> "ChainSpec":
        return cls(tuple(data["levels"]), data.get("mode", "restricted"))


# -- elements -----------------------------------------------------------------

class WreathElement:
    __slots__ = ("spec", "overrides", "defaults", "_key")

    def __init__(self, spec: ChainSpec, overrides: Optional[Dict[tuple, object]] = None,
                 defaults: Optional[Sequence] = None):
        kinds = spec.levels
        r = len(kinds)
        defs = list(defaults) if defaults is not None else [comp_identity(k) for k in kinds]
        if len(defs) != r:
            raise ShapeError("one default per level required")
        for k, d in zip(kinds, defs):
            comp_check(k, d)
        per_level = [dict() for _ in range(r)]
        for prefix, entry in (overrides or {}).items():
            prefix = tuple(prefix)
            i = len(prefix)
            if i >= r:
                raise ShapeError(f"prefix {prefix} too long for {r} levels")
            prefix = tuple(coord_check(kinds[j], x) for j, x in enumerate(prefix))
            comp_check(kinds[i], entry)
            if i == 0:
                defs[0] = entry
            elif entry != defs[i]:
                per_level[i][prefix] = entry
        if spec.mode == "restricted":
            for i in range(1, r):
                if not comp_is_identity(kinds[i], defs[i]):
                    raise ValueError("restricted elements have identity defaults below level 0")
        self.spec = spec
        self.defaults = tuple(defs)
        self.overrides = tuple(per_level)
        self._key = (spec, self.defaults,
                     tuple(tuple(sorted(lv.items(), key=lambda kv: kv[0])) for lv in per_level))

    def __eq__(self, other) -> bool:
        return isinstance(other, WreathElement) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        parts = []
        for i, d in enumerate(self.defaults):
            if not comp_is_identity(self.spec.levels[i], d):
                parts.append(f"L{i}:default={d!r}")
            for p, e in sorted(self.overrides[i].items()):
                parts.append(f"L{i}@{p}={e!r}")
        return "WreathElement(" + (", ".join(parts) or "1") + ")"

    def entry(self, level: int, prefix: tuple):
        if level == 0:
            return self.defaults[0]
        return self.overrides[level].get(prefix, self.defaults[level])

    def is_identity(self) -> bool:
        return all(comp_is_identity(k, d) for k, d in zip(self.spec.levels, self.defaults)) and \
            not any(self.overrides)

    def apply(self, p: Sequence) -> tuple:
        if len(p) > self.spec.depth:
            raise ShapeError("point has too many coordinates")
        kinds = self.spec.levels
        return tuple(comp_apply(kinds[i], self.entry(i, tuple(p[:i])), p[i]) for i in range(len(p)))

    def apply_inverse(self, p: Sequence) -> tuple:
        kinds = self.spec.levels
        q: list = []
        for i, y in enumerate(p):
            e = comp_inv(kinds[i], self.entry(i, tuple(q)))
            q.append(comp_apply(kinds[i], e, y))
        return tuple(q)

    def nontrivial_entries(self):
        """Yield ``(level, prefix, entry)`` for every non-identity override."""
        for i, lv in enumerate(self.overrides):
            for p, e in sorted(lv.items()):
                if not comp_is_identity(self.spec.levels[i], e):
                    yield i, p, e

    def default_moves(self, level: int) -> bool:
        return not comp_is_identity(self.spec.levels[level], self.defaults[level])

    def to_json(self) -> dict:
        kinds = self.spec.levels
        over = []
        if self.default_moves(0):
            over.append([[], comp_to_json(kinds[0], self.defaults[0])])
        for i, lv in enumerate(self.overrides):
            for p, e in sorted(lv.items()):
                prefix = [coord_to_json(kinds[j], x) for j, x in enumerate(p)]
                over.append([prefix, comp_to_json(kinds[i], e)])
        defaults = [comp_to_json(k, comp_identity(k)) for k in kinds]
        for i in range(1, len(kinds)):
            defaults[i] = comp_to_json(kinds[i], self.defaults[i])
        return {"overrides": over, "defaults": defaults}

    @classmethod
    def from_json(cls, spec: ChainSpec, data: dict) -> "WreathElement":
        kinds = spec.levels
        defaults = [comp_identity(k) for k in kinds]
        for i, d in enumerate(data.get("defaults") or []):
            defaults[i] = comp_from_json(kinds[i], d)
        over = {}
        for prefix, e in data.get("overrides", []):
            p = tuple(coord_from_json(kinds[j], x) for j, x in enumerate(prefix))
            over[p] = comp_from_json(kinds[len(p)], e)
        return cls(spec, over, defaults)


def _same_spec(a: WreathElement, b: WreathElement):
    if a.spec != b.spec:
        raise ShapeError(f"mixed chain specs {a.spec} and {b.spec}")


def wr_mul(a: WreathElement, b: WreathElement) -> WreathElement:
    """Apply ``a`` then ``b``."""
    _same_spec(a, b)
    kinds = a.spec.levels
    defaults = [comp_mul(k, x, y) for k, x, y in zip(kinds, a.defaults, b.defaults)]
    over = {}
    for i in range(1, len(kinds)):
        keys = set(a.overrides[i]) | {a.apply_inverse(q) for q in b.overrides[i]}
        for q in keys:
            over[q] = comp_mul(kinds[i], a.entry(i, q), b.entry(i, a.apply(q)))
    return WreathElement(a.spec, over, defaults)


def wr_inv(a: WreathElement) -> WreathElement:
    kinds = a.spec.levels
    defaults = [comp_inv(k, d) for k, d in zip(kinds, a.defaults)]
    over = {}
    for i in range(1, len(kinds)):
        for q, e in a.overrides[i].items():
            over[a.apply(q)] = comp_inv(kinds[i], e)
    return WreathElement(a.spec, over, defaults)


def _generic_order(a: WreathElement, b: WreathElement, level: int) -> int:
    """Sign of ``q a`` versus ``q b`` for every level-``level`` prefix ``q``.

    Only valid when neither element has overrides above ``level``.
    """
    kinds = a.spec.levels
    for j in range(level):
        x, y = a.defaults[j], b.defaults[j]
        if x == y:
            continue
        if kinds[j] == "Z":
            return 1 if x > y else -1
        raise RepresentabilityError(
            f"PLQ defaults at level {j} differ; their order varies from point to point")
    return 0


def _lattice(a: WreathElement, b: WreathElement, take_max: bool) -> WreathElement:
    _same_spec(a, b)
    kinds = a.spec.levels
    pick = comp_join if take_max else comp_meet
    defaults = [pick(kinds[0], a.defaults[0], b.defaults[0])]
    over = {}
    for i in range(1, len(kinds)):
        if a.defaults[i] == b.defaults[i]:
            defaults.append(a.defaults[i])
        else:
            if any(a.overrides[j] or b.overrides[j] for j in range(1, i)):
                raise RepresentabilityError(
                    f"defaults differ at level {i} below overridden blocks")
            s = _generic_order(a, b, i)
            if s == 0:
                defaults.append(pick(kinds[i], a.defaults[i], b.defaults[i]))
            else:
                winner = a if (s > 0) == take_max else b
                defaults.append(winner.defaults[i])
        for q in set(a.overrides[i]) | set(b.overrides[i]):
            s = lex_compare(a.apply(q), b.apply(q))
            if s == 0:
                over[q] = pick(kinds[i], a.entry(i, q), b.entry(i, q))
            else:
                winner = a if (s > 0) == take_max else b
                over[q] = winner.entry(i, q)
    return WreathElement(a.spec, over, defaults)


def wr_join(a: WreathElement, b: WreathElement) -> WreathElement:
    return _lattice(a, b, True)


def wr_meet(a: WreathElement, b: WreathElement) -> WreathElement:
    return _lattice(a, b, False)


def wr_algebra(op: str, a: WreathElement, b: Optional[WreathElement] = None) -> WreathElement:
    if op == "mul":
        return wr_mul(a, b)
    if op == "inv":
        return wr_inv(a)
    if op == "join":
        return wr_join(a, b)
    if op == "meet":
        return wr_meet(a, b)
    raise ValueError(f"unknown operation {op!r}")


def wr_apply(a: WreathElement, p: Sequence) -> tuple:
    if len(p) != a.spec.depth:
        raise ShapeError(f"point {tuple(p)} has the wrong arity")
    return a.apply(p)


@dataclass(frozen=True)
class WreathSupport:
    """Per level: finitely many moved prefixes, or every prefix."""

    element: WreathElement
    moved: Tuple[Tuple[tuple, ...], ...]
    everywhere: Tuple[bool, ...]

    def is_empty(self) -> bool:
        return not any(self.moved) and not any(self.everywhere)

    def __contains__(self, p) -> bool:
        return self.element.apply(p) != tuple(p)


def wr_support(a: WreathElement) -> WreathSupport:
    r = a.spec.depth
    moved = [[] for _ in range(r)]
    for i, p, _ in a.nontrivial_entries():
        moved[i].append(p)
    everywhere = tuple(a.default_moves(i) for i in range(r))
    return WreathSupport(a, tuple(tuple(m) for m in moved), everywhere)


def wr_dep(a: WreathElement, block) -> WreathElement:
    """Agree with ``a`` on the block and with the identity elsewhere."""
    level, prefix = block.level, tuple(block.prefix)
    if a.apply(prefix) != prefix:
        raise PreconditionError("the element does not stabilize the block")
    if level == 0:
        return a
    kinds = a.spec.levels
    for k in range(level + 1, len(kinds)):
        if a.default_moves(k):
            raise RepresentabilityError(
                "restricting a non-trivial default to one block needs infinitely many overrides")
    over = {prefix: a.entry(level, prefix)}
    for k in range(level + 1, len(kinds)):
        for p, e in a.overrides[k].items():
            if p[:level] == prefix:
                over[p] = e
    defaults = [comp_identity(k) for k in kinds]
    spec = a.spec
    return WreathElement(spec, over, defaults)


def _piece(a: WreathElement, level: int, prefix: tuple, window) -> WreathElement:
    """Restriction of ``a`` to points with this prefix and level-``level`` coordinate in ``window``.

    ``window`` is an open interval (PLQ) or None for the whole block.
    """
    kinds = a.spec.levels
    e = a.entry(level, prefix)
    over = {}
    if window is None:
        over[prefix] = e
    else:
        over[prefix] = pl_restrict(e, window.lower, window.upper)
    for k in range(level + 1, len(kinds)):
        for p, x in a.overrides[k].items():
            if p[:level] == prefix and (window is None or p[level] in window):
                over[p] = x
    return WreathElement(a.spec, over, [comp_identity(k) for k in kinds])


def irreducible_block(a: WreathElement):
    """The block ``(level, prefix)`` of an irreducible element, else None."""
    ok, _, block = _irreducible(a)
    return block if ok else None


def _outermost_level(a: WreathElement) -> Optional[int]:
    for i in range(a.spec.depth):
        if a.default_moves(i) or any(True for _ in _nontrivial_at(a, i)):
            return i
    return None


def _nontrivial_at(a: WreathElement, i: int):
    k = a.spec.levels[i]
    return (p for p, e in a.overrides[i].items() if not comp_is_identity(k, e))


def _irreducible(a: WreathElement):
    """Return ``(decision, splitting or None, block or None)``."""
    from .blocks import OBlock

    if a.is_identity() or wr_join(a, identity_of(a.spec)) != a:
        return False, None, None
    kinds = a.spec.levels
    r = len(kinds)
    j = _outermost_level(a)
    if j > 0 and a.default_moves(j):
        return False, None, None
    prefixes = [()] if j == 0 else sorted(_nontrivial_at(a, j))
    deeper_defaults = any(a.default_moves(k) for k in range(j + 1, r))
    if len(prefixes) > 1:
        if deeper_defaults:
            return False, None, None
        g1 = wr_dep(a, OBlock(j, prefixes[0]))
        return False, (g1, wr_mul(a, wr_inv(g1))), None
    q = prefixes[0]
    e = a.entry(j, q)
    if kinds[j] == "Z":
        windows = [None]
    else:
        windows = [b.carrier for b in pl_support(e)[1]]
    stray = []
    for k in range(j + 1, r):
        for p in _nontrivial_at(a, k):
            if p[:j] != q or (windows != [None] and not any(p[j] in w for w in windows)):
                stray.append(p)
    if len(windows) == 1 and not stray and (not deeper_defaults or windows == [None]):
        return True, None, OBlock(j, q)
    if deeper_defaults:
        return False, None, None
    if len(windows) > 1:
        g1 = _piece(a, j, q, windows[0])
    else:
        p = stray[0]
        g1 = wr_dep(a, OBlock(j + 1, p[: j + 1]))
    return False, (g1, wr_mul(a, wr_inv(g1))), None


def wr_is_irreducible(a: WreathElement, with_witness: bool = False):
    ok, split, _ = _irreducible(a)
    if with_witness:
        return ok, split
    return ok


def identity_of(spec: ChainSpec) -> WreathElement:
    return WreathElement(spec)


class WreathGroup:
    """The group of all representable elements for a :class:`ChainSpec`."""

    family = "wreath"

    def __init__(self, spec: ChainSpec):
        self.spec = spec
        self._one = WreathElement(spec)

    def __eq__(self, other) -> bool:
        return isinstance(other, WreathGroup) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"WreathGroup({list(self.spec.levels)}, {self.spec.mode!r})"

    @property
    def kinds(self) -> tuple:
        return self.spec.levels

    @property
    def mode(self) -> str:
        return self.spec.mode

    @property
    def depth(self) -> int:
        return self.spec.depth

    def identity(self) -> WreathElement:
        return self._one

    def element(self, overrides=None, defaults=None) -> WreathElement:
        return WreathElement(self.spec, overrides, defaults)

    def mul(self, a, b):
        return wr_mul(a, b)

    def inv(self, a):
        return wr_inv(a)

    def join(self, a, b):
        return wr_join(a, b)

    def meet(self, a, b):
        return wr_meet(a, b)

    def is_identity(self, a) -> bool:
        return a.is_identity()

    def apply(self, a, p):
        return wr_apply(a, p)

    def to_json(self) -> dict:
        return {"family": "wreath", **self.spec.to_json()}


def wreath(levels: Iterable[str], mode: str = "restricted") -> WreathGroup:
    return WreathGroup(ChainSpec(tuple(levels), mode))
