"""Chebyshev (l-infinity) distance between permutations and the induced weight."""

from __future__ import annotations

from .perm import Permutation


def chebyshev(p: Permutation, q: Permutation) -> int:
    """``max_i |p(i) - q(i)|`` over the union of both supports.

    Points moved by neither permutation contribute zero, so the value is the
    same in any symmetric group containing both.
    """
    pm, qm = p._map, q._map
    best = 0
    for x in pm.keys() | qm.keys():
        d = abs(pm.get(x, x) - qm.get(x, x))
        if d > best:
            best = d
    return best


def weight(p: Permutation) -> int:
    """Distance from the identity: the largest displacement of any symbol."""
    return max((abs(x - y) for x, y in p._map.items()), default=0)


def dense_weight(arr) -> int:
    """Weight of a zero-based image array."""
    return max((abs(v - i) for i, v in enumerate(arr)), default=0)
