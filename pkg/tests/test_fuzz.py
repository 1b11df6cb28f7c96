import math
from fractions import Fraction

import pytest

from conftest import random_cases
from crlab.chains import (
    ContactPair,
    CRAlgebra,
    bracket_witness,
    classify,
    contact_filtration,
    cr_chains,
    degeneracy_order,
    make_triple,
    wn_hull,
)
from crlab.chains.contact import evaluate_iterated
from crlab.core.scalars import QI, Gaussian
from crlab.formal import StarRealization, realization_kernel
from crlab.lie import generated_subalgebra, is_ideal, is_subalgebra, largest_ideal_in

CASES = 200


def random_q(rng, algebra, l0):
    """Complex subalgebra generated by ``u + iw`` for random pairs of l0 basis vectors."""
    cplx = algebra.with_field(QI)
    basis = l0.vectors()
    rng.shuffle(basis)
    if len(basis) % 2:
        basis.append(basis[0] * 0)
    vectors = [
        [Gaussian(u[k], w[k] * rng.choice([1, -1])) for k in range(algebra.dim)]
        for u, w in zip(basis[0::2], basis[1::2])
    ]
    return generated_subalgebra(cplx, cplx.span(vectors))


def test_filtration_law_and_stable_term():
    for _, a, l0 in random_cases(1, CASES):
        f = contact_filtration(ContactPair(a, l0))
        assert f.check_law() == []
        assert f.term(-f.depth).is_full()
        assert f.c0 == largest_ideal_in(a, l0)
        assert is_ideal(a, f.c0)
        for h in f.indices[1:]:
            assert f.term(h) <= f.term(h - 1)


def test_degeneracy_order_matches_ideal_criterion():
    for _, a, l0 in random_cases(2, CASES):
        t = make_triple(ContactPair(a, l0), a.zero())
        k = degeneracy_order(t)
        assert (k == math.inf) == (not t.filtration.c0.is_zero())


def test_bracket_witnesses_leave_l0():
    checked = 0
    for _, a, l0 in random_cases(3, 60):
        t = make_triple(ContactPair(a, l0), a.zero())
        for x in l0.vectors():
            w = bracket_witness(t, x)
            if t.filtration.c0.contains(x):
                assert w is None
                continue
            assert not l0.contains(w.value)
            assert list(evaluate_iterated(a, x, w.sequence)) == list(w.value)
            checked += 1
    assert checked > 0


def test_cr_chains_hull_and_implications():
    seen_fundamental = 0
    for rng, a, l0 in random_cases(4, CASES):
        q = random_q(rng, a, l0)
        if q.is_zero():
            continue
        c = CRAlgebra(a, q)
        chain = cr_chains(c)
        for term in chain.qbar_terms:
            assert is_subalgebra(c.complex, term)
        hull = wn_hull(c, chain)
        assert c.q <= hull.q <= c.q_plus_qbar
        assert cr_chains(hull).hull == hull.q
        assert wn_hull(hull).q == hull.q

        result = classify(c)
        if result.strict:
            assert result.weak
        if result.weak and result.k is not None:
            assert result.k != math.inf
        if result.fundamental:
            seen_fundamental += 1
    assert seen_fundamental > 0


@pytest.mark.slow
def test_realization_kernel_is_largest_ideal_on_random_pairs():
    for rng, a, _ in random_cases(5, 25):
        seed = [Fraction(rng.randint(-1, 1)) for _ in range(a.dim)]
        h0 = generated_subalgebra(a, a.span([seed]))
        if h0.is_full():
            continue
        r = StarRealization(a, h0)
        assert realization_kernel(r) == largest_ideal_in(a, h0)
