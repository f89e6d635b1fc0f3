"""Ehrenfeucht-Fraisse games on finite linear orders."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def ef_equiv(m: int, n: int, k: int) -> bool:
    """Duplicator wins the ``k``-round game on chains of sizes ``m`` and ``n``.

    A move at position ``i`` splits a chain into the parts below and above
    it, and the game continues independently on both sides, so the
    recursion runs on pairs of sizes rather than on pebble configurations.
    """
    if m < 0 or n < 0 or k < 0:
        raise ValueError("sizes and rank must be non-negative")
    if k == 0 or m == n:
        return True

    def answered(a: int, b: int) -> bool:
        return all(
            any(ef_equiv(i, j, k - 1) and ef_equiv(a - 1 - i, b - 1 - j, k - 1) for j in range(b))
            for i in range(a)
        )

    return answered(m, n) and answered(n, m)


def ef_brute_force(m: int, n: int, k: int) -> bool:
    """The same game played with explicit pebbles; slow but independent."""

    @lru_cache(maxsize=None)
    def win(pebbles: tuple, rounds: int) -> bool:
        if rounds == 0:
            return True
        for side, size, other in ((0, m, n), (1, n, m)):
            for x in range(size):
                ok = False
                for y in range(other):
                    pair = (x, y) if side == 0 else (y, x)
                    if _consistent(pebbles, pair) and win(tuple(sorted(pebbles + (pair,))), rounds - 1):
                        ok = True
                        break
                if not ok:
                    return False
        return True

    return win((), k)


def _consistent(pebbles: tuple, pair: tuple) -> bool:
    a, b = pair
    for x, y in pebbles:
        if (x < a) != (y < b) or (x == a) != (y == b):
            return False
    return True


def ef_threshold(m: int, n: int, k: int) -> bool:
    """Closed form: equal sizes, or both at least ``2**k - 1``."""
    t = 2 ** k - 1
    return m == n or (m >= t and n >= t)
