import itertools
import random

import pytest
from hypothesis import strategies as st

from permcodes.metric import weight
from permcodes.naesat import CAMWU_FORMULA, CnfFormula
from permcodes.perm import compose, from_cycles, from_one_line, identity

K1 = from_cycles([(1, 2), (3, 4)])
K2 = from_cycles([(1, 3), (2, 4)])
K3 = from_cycles([(1, 4), (2, 3)])
E = identity()

SINGLE_CLAUSE = CnfFormula.from_ints(3, [[1, 2, 3]])
CAMWU = CAMWU_FORMULA


def perms(degree=12):
    return st.permutations(range(1, degree + 1)).map(from_one_line)


def nontrivial_perms(degree=12):
    return perms(degree).filter(bool)


def naive_subset_products(gens):
    """Every product of a subset of ``gens``, composed one at a time with
    the sparse ``compose``; keyed by bitmask."""
    out = {}
    for mask in range(1 << len(gens)):
        p = identity()
        for i, g in enumerate(gens):
            if mask >> i & 1:
                p = compose(p, g)
        out[mask] = p
    return out


def naive_min_weight(elements):
    nonzero = [p for p in elements if p]
    if not nonzero:
        return None
    return min(weight(p) for p in nonzero)


@pytest.fixture
def single_clause():
    return SINGLE_CLAUSE


@pytest.fixture
def camwu_formula():
    return CAMWU


def random_small_groups(seed, count, max_degree=8, max_order=5040):
    """Seeded generator sets on degree <= max_degree whose closure has at
    most max_order elements."""
    from permcodes.errors import EnumerationCapError
    from permcodes.group import GeneratorSet, closure_enumerate

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        degree = rng.randint(2, max_degree)
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(1, degree + 1))
            if rng.random() < 0.5:
                # sparse generators keep many groups small
                a, b = rng.sample(images, 2)
                images[a - 1], images[b - 1] = b, a
            else:
                rng.shuffle(images)
            gens.append(from_one_line(images))
        gs = GeneratorSet(degree, tuple(gens))
        try:
            elems = closure_enumerate(gs, cap=max_order)
        except EnumerationCapError:
            continue
        out.append((gs, elems))
    return out


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
