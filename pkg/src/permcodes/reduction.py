"""Polynomial-time map from a NAESAT formula to a MINWSPA generator set.

For each variable x_i two generators are built::

    g_i  = v_{i,T} u_i  prod_{x_i in slot (j,k)} h_{j,k,T}  prod_{~x_i in slot (j,k)} h_{j,k,F}
    g'_i = v_{i,F} u_i  prod_{x_i in slot (j,k)} h_{j,k,F}  prod_{~x_i in slot (j,k)} h_{j,k,T}

The generated group has minimum nonzero weight 6 when the formula is
NAE-satisfiable and 7 otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .errors import InstanceTooLargeError, InvalidAssignmentError, InvalidInstanceError
from .gadgets import GadgetParams, assignment_gadget, clause_gadget, variable_gadget
from .group import GeneratorSet, dumps_generators, transposition_lists
from .metric import weight
from .minweight import min_nonzero_weight
from .naesat import Assignment, CnfFormula, all_assignments, is_nae_satisfied, random_formula, solve_nae_bruteforce
from .perm import Permutation, product

VERIFY_MAX_VARS = 12


@dataclass(frozen=True)
class OccurrenceSets:
    positive: frozenset[tuple[int, int, int]]
    negative: frozenset[tuple[int, int, int]]

    def of_variable(self, i: int):
        """Sorted (j, k) slots where x_i occurs positively, and negatively."""
        pos = sorted((j, k) for v, j, k in self.positive if v == i)
        neg = sorted((j, k) for v, j, k in self.negative if v == i)
        return pos, neg


def occurrences(f: CnfFormula) -> OccurrenceSets:
    pos, neg = set(), set()
    for j, clause in enumerate(f.clauses, 1):
        for k, lit in enumerate(clause, 1):
            (neg if lit.negated else pos).add((lit.variable, j, k))
    return OccurrenceSets(frozenset(pos), frozenset(neg))


def _tag(value: bool) -> str:
    return "T" if value else "F"


@dataclass(frozen=True)
class ReductionOutput:
    formula: CnfFormula
    params: GadgetParams
    generators: tuple[Permutation, ...]
    labels: tuple[str, ...]
    provenance: tuple[tuple[str, ...], ...]

    @property
    def degree(self) -> int:
        return self.params.degree

    @property
    def n(self) -> int:
        return self.params.n

    @cached_property
    def generator_set(self) -> GeneratorSet:
        return GeneratorSet(self.degree, self.generators)

    def generator(self, i: int, value: bool) -> Permutation:
        """g_i for ``value`` True, g'_i for False."""
        return self.generators[2 * (i - 1) + (0 if value else 1)]

    def dumps(self) -> str:
        comments = [f"{lab} = " + " ".join(prov) for lab, prov in zip(self.labels, self.provenance)]
        header = [f"NAESAT reduction: n={self.n} m={self.params.m}", f"formula: {self.formula}"]
        return dumps_generators(self.generator_set, comments, header)


def build_generators(f: CnfFormula) -> ReductionOutput:
    if f.m == 0:
        raise InvalidInstanceError("formula has no clauses")
    if f.num_vars < 2:
        raise InvalidInstanceError(f"reduction needs at least 2 variables, got {f.num_vars}")
    params = GadgetParams(f.m, f.num_vars)
    occ = occurrences(f)
    gens, labels, prov = [], [], []
    for i in range(1, f.num_vars + 1):
        pos, neg = occ.of_variable(i)
        for value in (True, False):
            parts = [variable_gadget(i, value, params), assignment_gadget(i, params)]
            names = [f"v{i}{_tag(value)}", f"u{i}"]
            for (j, k), slot_value in sorted([(s, value) for s in pos] + [(s, not value) for s in neg]):
                parts.append(clause_gadget(j, k, slot_value))
                names.append(f"h{j},{k},{_tag(slot_value)}")
            gens.append(product(parts))
            labels.append(f"g{i}" if value else f"g{i}'")
            prov.append(tuple(names))
    return ReductionOutput(f, params, tuple(gens), tuple(labels), tuple(prov))


def is_codeword_pattern(mask: int, n: int) -> bool:
    """Exactly one of g_i, g'_i for every variable."""
    return all((mask >> (2 * i) & 3) in (1, 2) for i in range(n))


def assignment_to_codeword(r: ReductionOutput, a: Assignment) -> Permutation:
    if len(a) != r.n:
        raise InvalidAssignmentError(f"assignment has {len(a)} values, reduction has {r.n} variables")
    return product(r.generator(i, v) for i, v in enumerate(a, 1))


def ring_symbols(params: GadgetParams) -> range:
    return range(params.b2 + 1, params.degree + 1)


@dataclass(frozen=True)
class CodewordCheck:
    assignment: Assignment
    weight: int
    satisfied: bool
    ring_fixed: bool

    @property
    def ok(self) -> bool:
        return self.ring_fixed and self.weight == (6 if self.satisfied else 7)


def check_codewords(r: ReductionOutput) -> list[CodewordCheck]:
    """Weight of every assignment's codeword against its NAE status."""
    out = []
    ring = ring_symbols(r.params)
    for a in all_assignments(r.n):
        pi = assignment_to_codeword(r, a)
        out.append(CodewordCheck(
            a, weight(pi), is_nae_satisfied(r.formula, a), all(pi(x) == x for x in ring)
        ))
    return out


def non_codeword_weights(r: ReductionOutput) -> dict[int, int]:
    """Weight of every subset product that is neither an assignment
    codeword nor the identity, keyed by generator bitmask."""
    if r.n > VERIFY_MAX_VARS:
        raise InstanceTooLargeError(f"{r.n} variables exceeds exact-verification limit {VERIFY_MAX_VARS}")
    weights = kernels.subset_weights(transposition_lists(r.generators), r.degree)
    return {
        mask: w for mask, w in enumerate(weights)
        if w != 0 and not is_codeword_pattern(mask, r.n)
    }


@dataclass(frozen=True)
class TheoremReport:
    formula: CnfFormula
    satisfiable: bool
    assignment: Assignment | None
    minweight: int

    @property
    def expected(self) -> int:
        return 6 if self.satisfiable else 7

    @property
    def consistent(self) -> bool:
        return self.minweight == self.expected


def verify_theorem(f: CnfFormula, method: str = "auto") -> TheoremReport:
    """Compare the brute-force NAE verdict with the exact minimum weight."""
    if f.num_vars > VERIFY_MAX_VARS:
        raise InstanceTooLargeError(f"{f.num_vars} variables exceeds exact-verification limit {VERIFY_MAX_VARS}")
    r = build_generators(f)
    sol = solve_nae_bruteforce(f)
    res = min_nonzero_weight(r.generator_set, method)
    return TheoremReport(f, sol is not None, sol, res.weight if res else 0)


def theorem_sweep(trials: int, seed: int, vars_range=(2, 6), clauses_range=(1, 5), method="auto"):
    """Seeded random formulas, each checked with :func:`verify_theorem`."""
    rng = random.Random(seed)
    reports = []
    for _ in range(trials):
        n = rng.randint(*vars_range)
        m = rng.randint(*clauses_range)
        reports.append(verify_theorem(random_formula(rng, n, m), method))
    return reports
