"""Exact minimum nonzero Chebyshev weight of a generated subgroup."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import kernels
from .errors import InstanceTooLargeError
from .group import (
    GeneratorSet,
    _closure_arrays,
    check_abelian_involutive,
    enumerate_arrays,
    is_abelian_involutive,
    order,
    schreier_sims,
    transposition_lists,
)
from .metric import dense_weight
from .perm import Permutation, compose, from_array, identity

METHODS = ("closure", "abelian", "bsgs", "auto")
MAX_ABELIAN_GENS = 24
MAX_GROUP_ORDER = 10**7


@dataclass(frozen=True)
class MinWeightResult:
    weight: int
    witness: Permutation
    method: str


def _best_of_arrays(arrays):
    best_w, best = 0, None
    for a in arrays:
        w = dense_weight(a)
        if w == 0:
            continue
        if best is None or w < best_w or (w == best_w and a < best):
            best_w, best = w, a
    return best_w, best


def _abelian(gs: GeneratorSet) -> MinWeightResult | None:
    check_abelian_involutive(gs.gens)
    if len(gs.gens) > MAX_ABELIAN_GENS:
        raise InstanceTooLargeError(f"{len(gs.gens)} generators exceeds subset-product limit {MAX_ABELIAN_GENS}")
    w, mask = kernels.min_subset_weight(transposition_lists(gs.gens), gs.degree)
    if w == 0:
        return None
    chosen = [g for i, g in enumerate(gs.gens) if mask >> i & 1]
    return MinWeightResult(w, reduce(compose, chosen, identity()), "abelian")


def _bsgs(gs: GeneratorSet) -> MinWeightResult | None:
    b = schreier_sims(gs)
    if order(b) > MAX_GROUP_ORDER:
        raise InstanceTooLargeError(f"group order {order(b)} exceeds limit {MAX_GROUP_ORDER}")
    w, best = _best_of_arrays(enumerate_arrays(b))
    return None if best is None else MinWeightResult(w, from_array(best), "bsgs")


def _closure(gs: GeneratorSet) -> MinWeightResult | None:
    w, best = _best_of_arrays(_closure_arrays(gs, MAX_GROUP_ORDER))
    return None if best is None else MinWeightResult(w, from_array(best), "closure")


def min_nonzero_weight(gs: GeneratorSet, method: str = "auto") -> MinWeightResult | None:
    """Minimum weight over the non-identity elements of the group.

    Returns ``None`` for the trivial group.  Among elements of minimum
    weight the witness is the one with the lexicographically smallest
    one-line form, so every method returns the same witness.

    ``auto`` uses the subset-product kernel when the generators are
    commuting involutions (and there are at most 24), else Schreier-Sims
    enumeration.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if method == "auto":
        if len(gs.gens) <= MAX_ABELIAN_GENS and is_abelian_involutive(gs.gens):
            method = "abelian"
        else:
            method = "bsgs"
    return {"abelian": _abelian, "bsgs": _bsgs, "closure": _closure}[method](gs)


def decide_minwspa(gs: GeneratorSet, bound: int, method: str = "auto") -> bool:
    """Is there a non-identity element of weight at most ``bound``?"""
    res = min_nonzero_weight(gs, method)
    return res is not None and res.weight <= bound
