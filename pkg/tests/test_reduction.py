import itertools
import random

import pytest

from permcodes.errors import InstanceTooLargeError, InvalidAssignmentError, InvalidInstanceError
from permcodes.gadgets import assignment_gadget, clause_gadget, variable_gadget
from permcodes.group import loads_generators
from permcodes.metric import weight
from permcodes.naesat import Assignment, CnfFormula, is_nae_satisfied, random_formula
from permcodes.perm import commute, compose, is_involution, product, support
from permcodes.reduction import (
    assignment_to_codeword,
    build_generators,
    check_codewords,
    is_codeword_pattern,
    non_codeword_weights,
    occurrences,
    theorem_sweep,
    verify_theorem,
)

from conftest import CAMWU, SINGLE_CLAUSE, naive_min_weight, naive_subset_products


def test_occurrences():
    occ = occurrences(CAMWU)
    assert occ.positive == {(1, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 2), (2, 2, 3)}
    assert occ.negative == {(1, 2, 1)}
    occ = occurrences(SINGLE_CLAUSE)
    assert occ.positive == {(1, 1, 1), (2, 1, 2), (3, 1, 3)}
    assert occ.negative == set()


def test_occurrence_count():
    rng = random.Random(2)
    for _ in range(20):
        f = random_formula(rng, rng.randint(2, 6), rng.randint(1, 5))
        occ = occurrences(f)
        assert len(occ.positive) + len(occ.negative) == 3 * f.m
        assert not occ.positive & occ.negative


def test_build_single_clause():
    r = build_generators(SINGLE_CLAUSE)
    assert r.degree == 102
    assert len(r.generators) == 6
    assert r.labels == ("g1", "g1'", "g2", "g2'", "g3", "g3'")
    p = r.params
    g1 = compose(compose(variable_gadget(1, True, p), assignment_gadget(1, p)), clause_gadget(1, 1, True))
    assert r.generators[0] == g1
    assert support(r.generators[0]) == {49, 52, 55, 58, 79, 86, 87, 94} | set(range(1, 25))
    assert r.provenance[0] == ("v1T", "u1", "h1,1,T")
    assert r.provenance[1] == ("v1F", "u1", "h1,1,F")


def test_build_camwu_negated_slot():
    r = build_generators(CAMWU)
    p = r.params
    assert r.degree == 48 * 2 + 18 * 2
    assert r.provenance[0] == ("v1T", "u1", "h1,1,T", "h2,1,F")
    assert r.provenance[1] == ("v1F", "u1", "h1,1,F", "h2,1,T")
    expect = product([variable_gadget(1, False, p), assignment_gadget(1, p),
                      clause_gadget(1, 1, False), clause_gadget(2, 1, True)])
    assert r.generator(1, False) == expect


def test_generators_commuting_involutions():
    rng = random.Random(8)
    for f in [SINGLE_CLAUSE, CAMWU] + [random_formula(rng, 4, 3) for _ in range(5)]:
        r = build_generators(f)
        assert all(is_involution(g) for g in r.generators)
        assert all(commute(a, b) for a, b in itertools.combinations(r.generators, 2))
        assert all(g.max_symbol() <= r.degree for g in r.generators)


def test_invalid_instances():
    with pytest.raises(InvalidInstanceError):
        build_generators(CnfFormula.from_ints(1, [[1, 1, 1]]))
    with pytest.raises(InvalidInstanceError):
        build_generators(CnfFormula(3, ()))


def test_codeword_examples():
    r = build_generators(SINGLE_CLAUSE)
    assert weight(assignment_to_codeword(r, Assignment((True, False, True)))) == 6
    assert weight(assignment_to_codeword(r, Assignment((True, True, True)))) == 7
    with pytest.raises(InvalidAssignmentError):
        assignment_to_codeword(r, Assignment((True,)))


@pytest.mark.parametrize("formula", [SINGLE_CLAUSE, CAMWU], ids=["single", "camwu"])
def test_lemma1_codewords(formula):
    checks = check_codewords(build_generators(formula))
    assert len(checks) == 2 ** formula.num_vars
    for c in checks:
        assert c.ring_fixed
        assert c.weight == (6 if c.satisfied else 7)
        assert c.satisfied == is_nae_satisfied(formula, c.assignment)


@pytest.mark.parametrize("formula", [SINGLE_CLAUSE, CAMWU], ids=["single", "camwu"])
def test_lemma2_floor(formula):
    r = build_generators(formula)
    rest = non_codeword_weights(r)
    n = formula.num_vars
    assert len(rest) == 4 ** n - 2 ** n - 1
    assert min(rest.values()) >= 7
    # the same through sparse composition
    prods = naive_subset_products(list(r.generators))
    for mask, p in prods.items():
        if mask and not is_codeword_pattern(mask, n):
            assert weight(p) == rest[mask]


def test_codeword_patterns():
    assert is_codeword_pattern(0b0110, 2)
    assert is_codeword_pattern(0b1001, 2)
    assert not is_codeword_pattern(0b0011, 2)
    assert not is_codeword_pattern(0b0100, 2)


def test_group_order_is_full():
    for f in (SINGLE_CLAUSE, CAMWU):
        r = build_generators(f)
        prods = naive_subset_products(list(r.generators))
        assert len(set(prods.values())) == 4 ** f.num_vars


def test_verify_theorem_examples():
    rep = verify_theorem(SINGLE_CLAUSE)
    assert (rep.satisfiable, rep.minweight, rep.consistent) == (True, 6, True)
    rep = verify_theorem(CAMWU)
    assert (rep.satisfiable, rep.minweight, rep.consistent) == (False, 7, True)
    with pytest.raises(InstanceTooLargeError):
        verify_theorem(CnfFormula.from_ints(13, [[1, 2, 3]]))


def test_sweep_against_naive_min():
    rng = random.Random(21)
    for _ in range(15):
        f = random_formula(rng, rng.randint(2, 4), rng.randint(1, 4))
        r = build_generators(f)
        naive = naive_min_weight(naive_subset_products(list(r.generators)).values())
        rep = verify_theorem(f)
        assert rep.minweight == naive
        assert rep.consistent


def test_sweep_is_seeded():
    a = theorem_sweep(10, seed=3)
    b = theorem_sweep(10, seed=3)
    assert [x.formula for x in a] == [x.formula for x in b]
    assert all(x.consistent for x in a)


def test_dumps_loads():
    r = build_generators(SINGLE_CLAUSE)
    text = r.dumps()
    assert "# g1 = v1T u1 h1,1,T" in text.splitlines()[3]
    assert loads_generators(text) == r.generator_set
