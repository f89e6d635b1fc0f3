"""Piecewise-linear order-automorphisms of Q with bounded carrier.

A :class:`PLMap` is stored as its canonical breakpoint list.  Maps act on
the right, so ``f * g`` means "apply f, then g", matching the convention
``a(fg) = (af)g`` used for conjugates ``g^f = f^-1 g f`` and commutators
``[f, g] = f^-1 g^-1 f g``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .order import Interval, IntervalSet, rat, rat_to_str


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


def _canonical(points: Iterable) -> tuple:
    F = Fraction
    pts = sorted({(x if type(x) is F else rat(x), y if type(y) is F else rat(y)) for x, y in points})
    # drop collinear interior breakpoints
    out: list = []
    for p in pts:
        while len(out) >= 2:
            (x0, y0), (x1, y1) = out[-2], out[-1]
            if (y1 - y0) * (p[0] - x1) == (p[1] - y1) * (x1 - x0):
                out.pop()
            else:
                break
        out.append(p)
    # identity segments at either end carry no information
    while len(out) >= 2 and out[0][0] == out[0][1] and out[1][0] == out[1][1]:
        out.pop(0)
    while len(out) >= 2 and out[-1][0] == out[-1][1] and out[-2][0] == out[-2][1]:
        out.pop()
    if len(out) <= 1:
        return ()
    return tuple(out)


class PLMap:
    """A PL automorphism of Q that is the identity outside ``[x_first, x_last]``."""

    __slots__ = ("breakpoints", "_xs", "_hash", "_inv")

    def __init__(self, breakpoints: Iterable = ()):
        bps = _canonical(breakpoints)
        if bps:
            if bps[0][0] != bps[0][1] or bps[-1][0] != bps[-1][1]:
                raise ValueError("carrier endpoints must be fixed")
            for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
                if not (x1 > x0 and y1 > y0):
                    raise ValueError("breakpoints must be strictly increasing")
        self._set(bps)

    def _set(self, bps: tuple) -> None:
        self.breakpoints = bps
        self._xs = [x for x, _ in bps]
        self._hash = hash(bps)
        self._inv = None

    @classmethod
    def identity(cls) -> "PLMap":
        return cls()

    @classmethod
    def bump(cls, lo, peak_x, peak_y, hi) -> "PLMap":
        """Three-breakpoint bump on ``(lo, hi)`` sending ``peak_x`` to ``peak_y``."""
        return cls([(lo, lo), (peak_x, peak_y), (hi, hi)])

    def __eq__(self, other) -> bool:
        return isinstance(other, PLMap) and self.breakpoints == other.breakpoints

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PLMap([{inner}])"

    def is_identity(self) -> bool:
        return not self.breakpoints

    @property
    def carrier(self) -> Optional[tuple]:
        if not self.breakpoints:
            return None
        return self.breakpoints[0][0], self.breakpoints[-1][0]

    def __call__(self, x) -> Fraction:
        return self.apply(x)

    def apply(self, x) -> Fraction:
        x = rat(x)
        bps = self.breakpoints
        if not bps or x <= bps[0][0] or x >= bps[-1][0]:
            return x
        i = bisect.bisect_right(self._xs, x)
        (x0, y0), (x1, y1) = bps[i - 1], bps[i]
        if x == x0:
            return y0
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def apply_inverse(self, y) -> Fraction:
        return self.inverse().apply(y)

    def inverse(self) -> "PLMap":
        # swapping coordinates keeps a canonical list canonical
        if self._inv is None:
            inv = PLMap.__new__(PLMap)
            inv._set(tuple((y, x) for x, y in self.breakpoints))
            inv._inv = self
            self._inv = inv
        return self._inv

    def __mul__(self, other: "PLMap") -> "PLMap":
        """Composition: apply ``self`` first, then ``other``."""
        if not self.breakpoints:
            return other
        if not other.breakpoints:
            return self
        inv = self.inverse()
        xs = set(self._xs) | {inv.apply(x) for x in other._xs}
        return PLMap((x, other.apply(self.apply(x))) for x in xs)

    def __invert__(self) -> "PLMap":
        return self.inverse()

    def __pow__(self, n: int) -> "PLMap":
        base = self if n >= 0 else self.inverse()
        out = PLMap()
        for _ in range(abs(n)):
            out = out * base
        return out

    def conj(self, f: "PLMap") -> "PLMap":
        """``self^f = f^-1 self f``."""
        return f.inverse() * self * f

    def _overlay(self, other: "PLMap", pick) -> "PLMap":
        xs = sorted(set(self._xs) | set(other._xs))
        if not xs:
            return PLMap()
        pts = set()
        for a, b in zip(xs, xs[1:]):
            fa, fb = self.apply(a), self.apply(b)
            ga, gb = other.apply(a), other.apply(b)
            pts.add((a, pick(fa, ga)))
            da, db = fa - ga, fb - gb
            if da * db < 0:
                # both maps are affine on [a, b]; insert the crossing point
                c = a + (b - a) * da / (da - db)
                pts.add((c, self.apply(c)))
        last = xs[-1]
        pts.add((last, pick(self.apply(last), other.apply(last))))
        pts.add((xs[0] - 1, xs[0] - 1))
        pts.add((last + 1, last + 1))
        return PLMap(pts)

    def join(self, other: "PLMap") -> "PLMap":
        return self._overlay(other, max)

    def meet(self, other: "PLMap") -> "PLMap":
        return self._overlay(other, min)

    __or__ = join
    __and__ = meet

    def __le__(self, other: "PLMap") -> bool:
        return self.join(other) == other

    def __ge__(self, other: "PLMap") -> bool:
        return other <= self

    def __lt__(self, other: "PLMap") -> bool:
        return self != other and self <= other

    def __gt__(self, other: "PLMap") -> bool:
        return other < self

    def abs(self) -> "PLMap":
        return self.join(self.inverse())

    def displacement_zeros(self) -> list:
        """Breakpoints plus every interior fixed point where the map crosses the diagonal."""
        bps = self.breakpoints
        pts = []
        for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
            pts.append(x0)
            d0, d1 = y0 - x0, y1 - x1
            if d0 * d1 < 0:
                pts.append(x0 + (x1 - x0) * d0 / (d0 - d1))
        if bps:
            pts.append(bps[-1][0])
        return pts

    def to_json(self) -> dict:
        return {"breakpoints": [[rat_to_str(x), rat_to_str(y)] for x, y in self.breakpoints]}

    @classmethod
    def from_json(cls, data: dict) -> "PLMap":
        return cls((rat(x), rat(y)) for x, y in data["breakpoints"])


@dataclass(frozen=True)
class Bump:
    carrier: Interval
    direction: str  # "up" or "down"


def pl_apply(f: PLMap, x) -> Fraction:
    return f.apply(x)


def pl_algebra(op: str, f: PLMap, g: Optional[PLMap] = None) -> PLMap:
    if op == "mul":
        return f * g
    if op == "inv":
        return f.inverse()
    if op == "join":
        return f.join(g)
    if op == "meet":
        return f.meet(g)
    raise ValueError(f"unknown operation {op!r}")


def pl_support(f: PLMap) -> tuple:
    """Open support of ``f`` and its maximal bumps, left to right."""
    pts = f.displacement_zeros()
    bumps = []
    for a, b in zip(pts, pts[1:]):
        mid = (a + b) / 2
        d = f.apply(mid) - mid
        if d == 0:
            continue
        direction = "up" if d > 0 else "down"
        if bumps and bumps[-1].direction == direction and bumps[-1].carrier.upper == a and f.apply(a) != a:
            prev = bumps.pop()
            bumps.append(Bump(Interval.open(prev.carrier.lower, b), direction))
        else:
            bumps.append(Bump(Interval.open(a, b), direction))
    return IntervalSet(b.carrier for b in bumps), bumps


def pl_restrict(f: PLMap, lo, hi) -> PLMap:
    """The map agreeing with ``f`` on ``[lo, hi]`` and the identity elsewhere.

    ``lo`` and ``hi`` must be fixed by ``f``.
    """
    lo, hi = rat(lo), rat(hi)
    if f.apply(lo) != lo or f.apply(hi) != hi:
        raise PreconditionError("restriction interval must be f-invariant")
    pts = [(lo, lo), (hi, hi)]
    pts += [(x, y) for x, y in f.breakpoints if lo < x < hi]
    return PLMap(pts)


def pl_interpolate(src: Sequence, dst: Sequence) -> PLMap:
    """The canonical PL map sending ``src[i]`` to ``dst[i]``.

    Linear between consecutive constraint points, identity outside
    ``[min - 1, max + 1]`` of all points involved.
    """
    src = [rat(x) for x in src]
    dst = [rat(x) for x in dst]
    if len(src) != len(dst) or not src:
        raise PreconditionError("src and dst must be non-empty and of equal length")
    for seq in (src, dst):
        if any(b <= a for a, b in zip(seq, seq[1:])):
            raise PreconditionError("src and dst must be strictly ascending")
    if src == dst:
        return PLMap()
    lo = min(src[0], dst[0]) - 1
    hi = max(src[-1], dst[-1]) + 1
    return PLMap([(lo, lo), *zip(src, dst), (hi, hi)])


def pl_is_irreducible(g: PLMap, with_witness: bool = False):
    """Decide whether ``g > 1`` has a single bump.

    With ``with_witness`` returns ``(decision, (g1, g2) or None)`` where the
    pair satisfies ``g1 v g2 = g`` and ``g1 ^ g2 = 1`` when ``g > 1`` is
    reducible.
    """
    _, bumps = pl_support(g)
    positive = bool(bumps) and all(b.direction == "up" for b in bumps)
    decision = positive and len(bumps) == 1
    if not with_witness:
        return decision
    if decision or not positive:
        return decision, None
    first = bumps[0].carrier
    g1 = pl_restrict(g, first.lower, first.upper)
    g2 = g * g1.inverse()
    return decision, (g1, g2)


class PLQGroup:
    """The bounded-carrier PL subgroup of Aut(Q) as a one-level model."""

    family = "plq"
    kinds = ("PLQ",)
    mode = "restricted"

    def __eq__(self, other) -> bool:
        return isinstance(other, PLQGroup)

    def __hash__(self) -> int:
        return hash("plq")

    def __repr__(self) -> str:
        return "PLQGroup()"

    @property
    def depth(self) -> int:
        return 1

    def identity(self) -> PLMap:
        return PLMap()

    def mul(self, a: PLMap, b: PLMap) -> PLMap:
        return a * b

    def inv(self, a: PLMap) -> PLMap:
        return a.inverse()

    def join(self, a: PLMap, b: PLMap) -> PLMap:
        return a.join(b)

    def meet(self, a: PLMap, b: PLMap) -> PLMap:
        return a.meet(b)

    def is_identity(self, a: PLMap) -> bool:
        return a.is_identity()

    def apply(self, a: PLMap, p):
        if isinstance(p, tuple):
            return (a.apply(p[0]),)
        return a.apply(p)

    def to_json(self) -> dict:
        return {"family": "plq"}
