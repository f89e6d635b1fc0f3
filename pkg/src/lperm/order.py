"""Exact rationals, lexicographic points and finite unions of intervals over Q.

Points of a lexicographic product are plain tuples, outermost coordinate
first.  Rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

NEG_INF = float("-inf")
POS_INF = float("inf")

Rational = Fraction
Point = tuple
Bound = Union[Fraction, float]


class ShapeError(ValueError):
    """Operands belong to differently shaped chains."""


def rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def lex_compare(p: Sequence, q: Sequence) -> int:
    """Return -1, 0 or 1 comparing ``p`` and ``q`` from the outermost level."""
    if len(p) != len(q):
        raise ShapeError(f"points of arity {len(p)} and {len(q)}")
    for a, b in zip(p, q):
        if a < b:
            return -1
        if a > b:
            return 1
    return 0


@dataclass(frozen=True)
class Interval:
    lower: Bound
    upper: Bound
    lower_open: bool = True
    upper_open: bool = True

    def __post_init__(self):
        if self.lower == NEG_INF and not self.lower_open:
            raise ValueError("unbounded ends are open")
        if self.upper == POS_INF and not self.upper_open:
            raise ValueError("unbounded ends are open")
        if self.lower > self.upper:
            raise ValueError(f"empty interval {self}")
        if self.lower == self.upper and (self.lower_open or self.upper_open):
            raise ValueError(f"empty interval {self}")

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(_bound(lo), _bound(hi), True, True)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(_bound(lo), _bound(hi), False, False)

    @classmethod
    def point(cls, x) -> "Interval":
        x = rat(x)
        return cls(x, x, False, False)

    def __contains__(self, x) -> bool:
        if x < self.lower or (x == self.lower and self.lower_open):
            return False
        if x > self.upper or (x == self.upper and self.upper_open):
            return False
        return True

    @property
    def bounded(self) -> bool:
        return self.lower != NEG_INF and self.upper != POS_INF

    def __str__(self) -> str:
        lb = "(" if self.lower_open else "["
        ub = ")" if self.upper_open else "]"
        return f"{lb}{_fmt(self.lower)}, {_fmt(self.upper)}{ub}"


def _bound(x) -> Bound:
    if isinstance(x, float):
        if x in (NEG_INF, POS_INF):
            return x
        raise TypeError("finite floats are not exact")
    return rat(x)


def _fmt(b: Bound) -> str:
    if b == NEG_INF:
        return "-inf"
    if b == POS_INF:
        return "+inf"
    return str(b)


def _touch(a: Interval, b: Interval) -> bool:
    """True when a (sorted before b) overlaps or abuts b so they merge."""
    if b.lower < a.upper:
        return True
    if b.lower == a.upper:
        return not (a.upper_open and b.lower_open)
    return False


def _lower_key(iv: Interval):
    return (iv.lower, 1 if iv.lower_open else 0)


def _upper_later(a: Interval, b: Interval) -> Interval:
    """Whichever of a, b reaches further right (closed beats open on ties)."""
    if a.upper != b.upper:
        return a if a.upper > b.upper else b
    return a if not a.upper_open else b


class IntervalSet:
    """A normalized finite union of intervals.

    Components are sorted, pairwise disjoint and never adjacent, so two
    IntervalSets are equal exactly when their component lists are.
    """

    __slots__ = ("components",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        self.components: tuple = self._normalize(intervals)

    @staticmethod
    def _normalize(intervals: Iterable[Interval]) -> tuple:
        ivs = sorted(intervals, key=_lower_key)
        out: list = []
        for iv in ivs:
            if out and _touch(out[-1], iv):
                cur = out[-1]
                far = _upper_later(cur, iv)
                out[-1] = Interval(cur.lower, far.upper, cur.lower_open, far.upper_open)
            else:
                out.append(iv)
        return tuple(out)

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls()

    @classmethod
    def everything(cls) -> "IntervalSet":
        return cls([Interval(NEG_INF, POS_INF)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __bool__(self) -> bool:
        return bool(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __contains__(self, x) -> bool:
        return any(x in iv for iv in self.components)

    def __repr__(self) -> str:
        return "IntervalSet(" + " u ".join(map(str, self.components)) + ")"

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.components + other.components)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.components:
            for b in other.components:
                lo, lo_open = max((a.lower, a.lower_open), (b.lower, b.lower_open))
                if a.upper < b.upper or (a.upper == b.upper and a.upper_open):
                    hi, hi_open = a.upper, a.upper_open
                else:
                    hi, hi_open = b.upper, b.upper_open
                if lo < hi or (lo == hi and not lo_open and not hi_open):
                    out.append(Interval(lo, hi, lo_open, hi_open))
        return IntervalSet(out)

    def complement(self) -> "IntervalSet":
        out = []
        lo, lo_open = NEG_INF, True
        for iv in self.components:
            if iv.lower != NEG_INF:
                hi, hi_open = iv.lower, not iv.lower_open
                if lo < hi or (lo == hi and not lo_open and not hi_open):
                    out.append(Interval(lo, hi, lo_open, hi_open))
            lo, lo_open = iv.upper, not iv.upper_open
        if lo != POS_INF:
            out.append(Interval(lo, POS_INF, lo_open, True))
        return IntervalSet(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersect(other.complement())

    def issubset(self, other: "IntervalSet") -> bool:
        return self.difference(other) == IntervalSet()


def interval_set_algebra(op: str, a: IntervalSet, b=None):
    """Dispatch ``union``, ``intersect``, ``complement`` or ``member``."""
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "complement":
        return a.complement()
    if op == "member":
        return b in a
    raise ValueError(f"unknown interval-set operation {op!r}")
