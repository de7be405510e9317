"""Fixed gadget permutations of the NAESAT reduction.

Symbol layout for a formula with ``m`` clauses and ``n`` variables
(degree ``48m + 18n``)::

    [1, 48m]                clause gadgets, 48 symbols per clause
                            (24 for the T copy, 24 for the F copy)
    [48m+1, 48m+10n]        variable gadgets, 10 symbols per variable
    [48m+10n+1, 48m+18n]    assignment ring, 8 symbols per variable
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInstanceError
from .perm import Permutation, compose, from_cycles, product, shift, stretch


class Klein(enum.IntEnum):
    # the bit encoding makes the group law XOR
    E = 0
    K1 = 1
    K2 = 2
    K3 = 3


_KLEIN_CYCLES = {
    Klein.E: (),
    Klein.K1: ((1, 2), (3, 4)),
    Klein.K2: ((1, 3), (2, 4)),
    Klein.K3: ((1, 4), (2, 3)),
}


def klein(tag: Klein) -> Permutation:
    return from_cycles(_KLEIN_CYCLES[Klein(tag)])


def klein_mul(a: Klein, b: Klein) -> Klein:
    return Klein(int(a) ^ int(b))


def _block(k1: Klein, k2: Klein, k3: Klein) -> Permutation:
    """``a2(k1) s1(a2(k1)) s8(a2(k2)) s9(a2(k2)) s16(a2(k3)) s17(a2(k3))``."""
    parts = []
    for offset, tag in ((0, k1), (8, k2), (16, k3)):
        base = stretch(klein(tag), 2)
        parts += [shift(base, offset), shift(base, offset + 1)]
    return product(parts)


@lru_cache(maxsize=None)
def base_h(k: int) -> Permutation:
    """The weight-6 clause-slot permutations h1, h2, h3 on [24]."""
    K1, K2, K3 = Klein.K1, Klein.K2, Klein.K3
    rows = {1: (K1, K2, K3), 2: (K2, K3, K1), 3: (K3, K1, K2)}
    if k not in rows:
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    return _block(*rows[k])


@lru_cache(maxsize=None)
def base_g() -> Permutation:
    """The weight-7 permutation g on [24]: reverses each block of 8."""
    swaps = from_cycles((2 * i - 1, 2 * i) for i in range(1, 13))
    return compose(swaps, _block(Klein.K3, Klein.K3, Klein.K3))


V_TRUE = from_cycles([(1, 4), (7, 10)])
V_FALSE = from_cycles([(1, 7), (4, 10)])
RING_SWAP = from_cycles([(1, 8)])


@dataclass(frozen=True)
class GadgetParams:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInstanceError(f"need at least one clause, got m={self.m}")
        if self.n < 2:
            raise InvalidInstanceError(f"need at least two variables, got n={self.n}")

    @property
    def b1(self) -> int:
        return 48 * self.m - 10

    @property
    def b2(self) -> int:
        return 48 * self.m + 10 * self.n

    @property
    def degree(self) -> int:
        return 48 * self.m + 18 * self.n


@lru_cache(maxsize=None)
def _gh(k: int) -> Permutation:
    return compose(base_g(), base_h(k))


def clause_gadget(j: int, k: int, value: bool) -> Permutation:
    """h_{j,k,T} or h_{j,k,F}: ``g h_k`` placed in the T or F half of clause j's block."""
    if j < 1:
        raise ValueError(f"clause index must be >= 1, got {j}")
    return shift(_gh(k), 48 * (j - 1) + (0 if value else 24))


def variable_gadget(i: int, value: bool, params: GadgetParams) -> Permutation:
    if not 1 <= i <= params.n:
        raise ValueError(f"variable index {i} outside 1..{params.n}")
    return shift(V_TRUE if value else V_FALSE, params.b1 + 10 * i)


def ring_swap(i: int, params: GadgetParams) -> Permutation:
    """The transposition ``(b2+8i-7, b2+8i)`` shared by u_{i-1} and u_i."""
    return shift(RING_SWAP, params.b2 + 8 * (i - 1))


def assignment_gadget(i: int, params: GadgetParams) -> Permutation:
    """u_i = t_i t_{i+1}, closing the ring with u_n = t_n t_1."""
    if not 1 <= i <= params.n:
        raise ValueError(f"variable index {i} outside 1..{params.n}")
    nxt = i % params.n + 1
    return compose(ring_swap(i, params), ring_swap(nxt, params))

