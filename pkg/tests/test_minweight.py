import pytest

from permcodes.errors import InstanceTooLargeError, NotAbelianInvolutiveError
from permcodes.group import GeneratorSet
from permcodes.metric import weight
from permcodes.minweight import decide_minwspa, min_nonzero_weight
from permcodes.perm import from_cycles, to_one_line
from permcodes.reduction import build_generators

from conftest import CAMWU, K1, K2, SINGLE_CLAUSE, naive_min_weight, naive_subset_products, random_small_groups

T12 = GeneratorSet(2, (from_cycles([(1, 2)]),))


def test_single_transposition():
    for method in ("auto", "abelian", "bsgs", "closure"):
        res = min_nonzero_weight(T12, method)
        assert res.weight == 1
        assert res.witness == from_cycles([(1, 2)])
    assert decide_minwspa(T12, 1)
    assert not decide_minwspa(T12, 0)


def test_trivial_group():
    gs = GeneratorSet(3, ())
    for method in ("auto", "abelian", "bsgs", "closure"):
        assert min_nonzero_weight(gs, method) is None
    assert not decide_minwspa(gs, 100)


def test_reduction_examples():
    sat = build_generators(SINGLE_CLAUSE).generator_set
    unsat = build_generators(CAMWU).generator_set
    assert min_nonzero_weight(sat).weight == 6
    assert min_nonzero_weight(unsat).weight == 7
    assert decide_minwspa(sat, 6) and not decide_minwspa(sat, 5)
    assert not decide_minwspa(unsat, 6) and decide_minwspa(unsat, 7)


@pytest.mark.parametrize("formula", [SINGLE_CLAUSE, CAMWU], ids=["single", "camwu"])
def test_methods_agree_on_reductions(formula):
    gs = build_generators(formula).generator_set
    results = [min_nonzero_weight(gs, m) for m in ("abelian", "bsgs", "closure")]
    assert len({r.weight for r in results}) == 1
    assert len({r.witness for r in results}) == 1
    assert min_nonzero_weight(gs).method == "abelian"
    # witness is the lexicographically least one-line form of minimum weight
    prods = naive_subset_products(list(gs.gens)).values()
    w = naive_min_weight(prods)
    best = min(to_one_line(p, gs.degree) for p in prods if p and weight(p) == w)
    assert to_one_line(results[0].witness, gs.degree) == best


def test_methods_agree_on_random_groups():
    for gs, elems in random_small_groups(seed=9, count=20, max_degree=7):
        bsgs = min_nonzero_weight(gs, "bsgs")
        clos = min_nonzero_weight(gs, "closure")
        expect = naive_min_weight(elems)
        if expect is None:
            assert bsgs is None and clos is None
            continue
        assert bsgs.weight == clos.weight == expect
        assert bsgs.witness == clos.witness
        assert bsgs.witness in elems
        assert min_nonzero_weight(gs).weight == expect


def test_abelian_precondition():
    s3 = GeneratorSet(3, (from_cycles([(1, 2)]), from_cycles([(1, 2, 3)])))
    with pytest.raises(NotAbelianInvolutiveError):
        min_nonzero_weight(s3, "abelian")
    assert min_nonzero_weight(s3).method == "bsgs"


def test_guards(monkeypatch):
    from permcodes import minweight
    monkeypatch.setattr(minweight, "MAX_GROUP_ORDER", 3)
    gs = GeneratorSet(4, (K1, K2))
    with pytest.raises(InstanceTooLargeError):
        min_nonzero_weight(gs, "bsgs")
    with pytest.raises(InstanceTooLargeError):
        min_nonzero_weight(gs, "closure")
    monkeypatch.setattr(minweight, "MAX_ABELIAN_GENS", 1)
    with pytest.raises(InstanceTooLargeError):
        min_nonzero_weight(gs, "abelian")
    with pytest.raises(ValueError):
        min_nonzero_weight(gs, "heuristic")
