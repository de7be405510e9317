"""The earlier Cameron-Wu reduction and the instance on which it fails.

Their construction uses ``(2i-1, 2i)`` as the variable gadget for x_i and
``s_{2n+24(j-1)}(h_k)`` for slot k of clause j, plus one extra generator
applying ``g`` to every clause block.  On the NAE-unsatisfiable formula
``(x1 | x2 | x2) & (~x1 | x2 | x2)`` the group still contains
``g_c g_1 g'_1`` of weight 5, which their argument rules out.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gadgets import base_g, base_h
from .group import GeneratorSet, contains, schreier_sims
from .metric import weight
from .minweight import MinWeightResult, min_nonzero_weight
from .naesat import CAMWU_FORMULA, CnfFormula, solve_nae_bruteforce
from .perm import Permutation, compose, format_cycles, from_cycles, product, shift
from .reduction import occurrences


@dataclass(frozen=True)
class CwReduction:
    formula: CnfFormula
    g: tuple[Permutation, ...]
    g_prime: tuple[Permutation, ...]
    g_c: Permutation

    @property
    def degree(self) -> int:
        return 2 * self.formula.num_vars + 24 * self.formula.m

    @cached_property
    def generator_set(self) -> GeneratorSet:
        gens = [x for pair in zip(self.g, self.g_prime) for x in pair] + [self.g_c]
        return GeneratorSet(self.degree, tuple(gens))


def _block_offset(f: CnfFormula, j: int) -> int:
    return 2 * f.num_vars + 24 * (j - 1)


def cw_build(f: CnfFormula) -> CwReduction:
    if f.m < 1 or f.num_vars < 1:
        raise ValueError("need at least one clause and one variable")
    occ = occurrences(f)
    g, gp = [], []
    for i in range(1, f.num_vars + 1):
        v = from_cycles([(2 * i - 1, 2 * i)])
        pos, neg = occ.of_variable(i)
        g.append(product([v] + [shift(base_h(k), _block_offset(f, j)) for j, k in pos]))
        gp.append(product([v] + [shift(base_h(k), _block_offset(f, j)) for j, k in neg]))
    g_c = product(shift(base_g(), _block_offset(f, j)) for j in range(1, f.m + 1))
    return CwReduction(f, tuple(g), tuple(gp), g_c)


@dataclass(frozen=True)
class CounterexampleReport:
    satisfiable: bool
    element: Permutation
    expected: Permutation
    element_weight: int
    member: bool
    group_min: MinWeightResult

    @property
    def matches_expected(self) -> bool:
        return self.element == self.expected

    @property
    def refutes(self) -> bool:
        """Unsatisfiable formula, yet a member of weight at most 5."""
        return (not self.satisfiable and self.member and self.matches_expected
                and self.element_weight == 5 and self.group_min.weight <= 5)

    def lines(self) -> list[str]:
        return [
            f"formula={CAMWU_FORMULA}",
            f"nae_satisfiable={str(self.satisfiable).lower()}",
            f"element=g_c*g_1*g'_1={format_cycles(self.element)}",
            f"equals_s4(gh1)*s28(gh1)={str(self.matches_expected).lower()}",
            f"element_weight={self.element_weight}",
            f"element_in_group={str(self.member).lower()}",
            f"group_min_weight={self.group_min.weight}",
            f"group_min_witness={format_cycles(self.group_min.witness)}",
            f"counterexample={'confirmed' if self.refutes else 'not confirmed'}",
        ]


def counterexample_demo() -> CounterexampleReport:
    f = CAMWU_FORMULA
    cw = cw_build(f)
    elem = product([cw.g_c, cw.g[0], cw.g_prime[0]])
    gh1 = compose(base_g(), base_h(1))
    expected = compose(shift(gh1, 4), shift(gh1, 28))
    bsgs = schreier_sims(cw.generator_set)
    return CounterexampleReport(
        satisfiable=solve_nae_bruteforce(f) is not None,
        element=elem,
        expected=expected,
        element_weight=weight(elem),
        member=contains(bsgs, elem),
        group_min=min_nonzero_weight(cw.generator_set),
    )
