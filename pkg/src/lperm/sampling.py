"""Seeded random elements of the computable models."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from .blocks import OBlock, element_at, is_pl_model, model_kinds
from .pl import PLMap
from .wreath import WreathElement


def random_pl(rng: random.Random, max_bumps: int = 2, span: int = 8) -> PLMap:
    """Product of a few random bumps with small dyadic breakpoints."""
    out = PLMap()
    for _ in range(rng.randint(0, max_bumps)):
        lo = Fraction(rng.randint(-4 * span, 4 * span), 4)
        hi = lo + Fraction(rng.randint(1, 4 * span), 4)
        px = lo + (hi - lo) * Fraction(rng.randint(1, 7), 8)
        if rng.random() < 0.5:
            py = px + (hi - px) * Fraction(rng.randint(1, 7), 8)
        else:
            py = px - (px - lo) * Fraction(rng.randint(1, 7), 8)
        out = out * PLMap.bump(lo, px, py, hi)
    return out


def _entry(kind: str, rng: random.Random):
    return rng.randint(-3, 3) if kind == "Z" else random_pl(rng, 2, 4)


def _coord(kind: str, rng: random.Random):
    return rng.randint(-3, 3) if kind == "Z" else Fraction(rng.randint(-12, 12), 4)


def random_wreath(G, rng: random.Random, max_entries: int = 4) -> WreathElement:
    kinds = model_kinds(G)
    over = {(): _entry(kinds[0], rng)} if rng.random() < 0.5 else {}
    for _ in range(rng.randint(0, max_entries)):
        level = rng.randint(1, len(kinds) - 1) if len(kinds) > 1 else 0
        prefix = tuple(_coord(kinds[j], rng) for j in range(level))
        over[prefix] = _entry(kinds[level], rng)
    return WreathElement(G.spec, over)


def random_element(G, rng: random.Random):
    return random_pl(rng) if is_pl_model(G) else random_wreath(G, rng)


def random_irreducible(G, rng: random.Random, level: int):
    """An irreducible element whose block sits at ``level``."""
    kinds = model_kinds(G)
    prefix = tuple(_coord(kinds[j], rng) for j in range(level))
    if kinds[level] == "Z":
        entry = rng.choice([1, 2, 3])
    else:
        lo = Fraction(rng.randint(-12, 12), 4)
        hi = lo + Fraction(rng.randint(1, 12), 4)
        px = (lo + hi) / 2
        entry = PLMap.bump(lo, px, px + (hi - px) * Fraction(rng.randint(1, 7), 8), hi)
    return element_at(G, OBlock(level, prefix), entry)


def random_points(G, rng: random.Random, n: int) -> List:
    kinds = model_kinds(G)
    if is_pl_model(G):
        return [Fraction(rng.randint(-40, 40), 4) for _ in range(n)]
    return [tuple(_coord(k, rng) for k in kinds) for _ in range(n)]
