import logging
import random

import pytest

from permcodes.errors import DomainError, EnumerationCapError, NotAbelianInvolutiveError, ParseError
from permcodes.group import (
    GeneratorSet,
    abelian_involution_enumerate,
    closure_enumerate,
    contains,
    dumps_generators,
    enumerate_elements,
    loads_generators,
    order,
    schreier_sims,
)
from permcodes.perm import compose, from_cycles, from_one_line, identity, inverse
from permcodes.reduction import build_generators

from conftest import E, K1, K2, K3, SINGLE_CLAUSE, random_small_groups

S4 = GeneratorSet(4, (from_cycles([(1, 2)]), from_cycles([(1, 2, 3, 4)])))
KLEIN = GeneratorSet(4, (K1, K2))


def test_closure_examples():
    assert closure_enumerate(KLEIN) == {E, K1, K2, K3}
    assert closure_enumerate(GeneratorSet(2, (from_cycles([(1, 2)]),))) == {E, from_cycles([(1, 2)])}
    assert len(closure_enumerate(S4)) == 24
    with pytest.raises(EnumerationCapError):
        closure_enumerate(S4, cap=10)


def test_orders():
    assert order(schreier_sims(S4)) == 24
    assert order(schreier_sims(KLEIN)) == 4
    assert order(schreier_sims(GeneratorSet(5, ()))) == 1
    assert list(enumerate_elements(schreier_sims(GeneratorSet(5, ())))) == [identity()]


def test_large_symmetric_group_order():
    # S_12 from a transposition and a 12-cycle
    gs = GeneratorSet(12, (from_cycles([(1, 2)]), from_cycles([tuple(range(1, 13))])))
    assert order(schreier_sims(gs)) == 479001600


def test_contains_examples():
    b = schreier_sims(KLEIN)
    assert contains(b, K3)
    assert not contains(b, from_cycles([(1, 2)]))
    assert contains(b, identity())
    with pytest.raises(DomainError):
        contains(b, from_cycles([(4, 5)]))


def test_bsgs_strong_generators_sift():
    b = schreier_sims(S4)
    for s in b.strong_generators():
        assert contains(b, s)
    for i, point in enumerate(b.base):
        for p, u in b.transversal(i).items():
            assert u(point) == p


def test_determinism():
    a = schreier_sims(S4)
    b = schreier_sims(S4)
    assert a.base == b.base
    assert a.transversals == b.transversals
    assert a.strong_gens == b.strong_gens


def test_identity_generators_dropped(caplog):
    with caplog.at_level(logging.WARNING):
        gs = GeneratorSet(4, (identity(), K1))
    assert gs.gens == (K1,)
    assert "identity" in caplog.text


def test_generator_degree_check():
    with pytest.raises(DomainError):
        GeneratorSet(3, (K1,))


def test_oracle_equivalence_random():
    for gs, elems in random_small_groups(seed=1, count=20):
        b = schreier_sims(gs)
        listed = list(enumerate_elements(b))
        assert order(b) == len(elems)
        assert len(listed) == len(set(listed))
        assert set(listed) == elems


def test_sifting_soundness():
    rng = random.Random(5)
    for gs, elems in random_small_groups(seed=2, count=8, max_degree=6):
        b = schreier_sims(gs)
        for p in elems:
            assert contains(b, p)
        for _ in range(100):
            images = list(range(1, gs.degree + 1))
            rng.shuffle(images)
            p = from_one_line(images)
            assert contains(b, p) == (p in elems)


def test_abelian_enumerate():
    pairs = list(abelian_involution_enumerate(KLEIN))
    assert len(pairs) == 4
    assert {p for _, p in pairs} == {E, K1, K2, K3}
    assert dict(pairs)[(1, 1)] == K3
    assert list(abelian_involution_enumerate(GeneratorSet(3, ()))) == [((), identity())]


def test_abelian_enumerate_reduction_is_injective():
    r = build_generators(SINGLE_CLAUSE)
    products = [p for _, p in abelian_involution_enumerate(r.generator_set)]
    assert len(products) == 64
    assert len(set(products)) == 64


def test_abelian_enumerate_precondition():
    with pytest.raises(NotAbelianInvolutiveError):
        list(abelian_involution_enumerate(S4))
    with pytest.raises(NotAbelianInvolutiveError):
        list(abelian_involution_enumerate(GeneratorSet(3, (from_cycles([(1, 2)]), from_cycles([(2, 3)])))))


def test_file_round_trip():
    gs = GeneratorSet(6, (K1, from_cycles([(1, 3, 2), (5, 6)])))
    text = dumps_generators(gs, ["first", ""], header=["hello"])
    assert text.splitlines()[0] == "# hello"
    assert text.splitlines()[1] == "degree 6"
    assert loads_generators(text) == gs


def test_file_identity_line_dropped():
    assert loads_generators("degree 3\n()\n(1,2)\n").gens == (from_cycles([(1, 2)]),)


@pytest.mark.parametrize("text,lineno", [
    ("(1,2)\n", 1),
    ("degree x\n", 1),
    ("# c\ndegree 3\n(1,4)\n", 3),
    ("degree 3\n(1,2)(2,3)\n", 2),
    ("degree 3\n(1,2\n", 2),
])
def test_file_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        loads_generators(text)
    assert exc.value.lineno == lineno


def test_file_missing_degree():
    with pytest.raises(ParseError):
        loads_generators("# only a comment\n")
