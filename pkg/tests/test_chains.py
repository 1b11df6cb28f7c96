import math

import pytest

from crlab.chains import (
    ContactPair,
    CRAlgebra,
    associated_triple,
    bracket_witness,
    classify,
    contact_filtration,
    cr_chains,
    degeneracy_order,
    make_triple,
    nondegenerate_by_ideals,
    nu,
    strict_nondegenerate,
    weak_nondegenerate,
    wn_hull,
)
from crlab.core.scalars import QI, Gaussian, I, Q
from crlab.core.subspace import Subspace
from crlab.errors import (
    AmbientMismatch,
    NotContainedInL0,
    NotFundamental,
    NotL0Stable,
    NotSubalgebra,
    NotTransitive,
    PreconditionViolated,
    QNotSubalgebra,
)
from crlab.lie import LieAlgebra, largest_ideal_in, preset


@pytest.fixture
def h3_plus_w():
    """Heisenberg algebra with an extra central generator ``W``."""
    return LieAlgebra("h3+w", Q, ["X", "Y", "Z", "W"], {(0, 1): {2: 1}})


@pytest.fixture
def degenerate_triple(h3_plus_w):
    a = h3_plus_w
    return make_triple(ContactPair(a, a.span_of("X", "Y", "W")), a.zero())


def test_heisenberg_filtration(h3):
    a = h3.algebra
    f = contact_filtration(ContactPair(a, h3.subspaces["l0"]))
    assert f.depth == 2
    assert f.term(-2).is_full()
    assert f.term(0).is_zero()
    assert f.c0.is_zero()
    assert f.check_law() == []


def test_full_distribution_has_depth_zero(h3):
    f = contact_filtration(ContactPair(h3.algebra, h3.algebra.full()))
    assert f.depth == 0
    assert f.c0.is_full()


def test_abelian_is_not_fundamental():
    a = preset("abelian:3").algebra
    with pytest.raises(NotFundamental):
        contact_filtration(ContactPair(a, a.span_of("e1", "e2")))


@pytest.mark.parametrize(
    "name, labels, depth",
    [
        ("heisenberg:1", ("X", "Y"), 2),
        ("heisenberg:2", ("X1", "X2", "Y1", "Y2"), 2),
        ("filiform:4", ("e1", "e2"), 3),
    ],
)
def test_depth(name, labels, depth):
    a = preset(name).algebra
    assert contact_filtration(ContactPair(a, a.span_of(*labels))).depth == depth


def test_filtration_is_h0_module(sl2):
    a = sl2.algebra
    f = contact_filtration(ContactPair(a, a.full()))
    assert f.depth == 0
    assert f.check_law() == []
    assert f.is_h0_module(sl2.subspaces["h0"])


def test_make_triple_checks_clauses(h3):
    a = h3.algebra
    pair = ContactPair(a, h3.subspaces["l0"])
    assert make_triple(pair, a.zero()).h0.is_zero()
    with pytest.raises(NotTransitive):
        make_triple(ContactPair(a, a.span_of("X", "Y", "Z")), a.span_of("Z"))
    with pytest.raises(NotSubalgebra):
        make_triple(pair, a.span_of("X", "Y"))
    with pytest.raises(NotContainedInL0):
        make_triple(pair, a.span([[0, 1, 1]]))


def test_isotropy_must_preserve_l0(h3):
    a = h3.algebra
    # span{X} passes the earlier clauses but [X, Y] = Z leaves l0
    with pytest.raises(NotL0Stable) as e:
        make_triple(ContactPair(a, h3.subspaces["l0"]), a.span_of("X"))
    payload = e.value.payload()
    assert payload["error"] == "not_l0_stable"
    assert "h0" in payload and "l0" in payload


def test_heisenberg_is_strict(h3):
    t = make_triple(ContactPair(h3.algebra, h3.subspaces["l0"]), h3.algebra.zero())
    assert strict_nondegenerate(t)
    assert nondegenerate_by_ideals(t)
    assert degeneracy_order(t) == 0


def test_central_generator_is_degenerate(degenerate_triple, h3_plus_w):
    t = degenerate_triple
    assert not strict_nondegenerate(t)
    assert not nondegenerate_by_ideals(t)
    assert degeneracy_order(t) == math.inf
    assert largest_ideal_in(h3_plus_w, t.l0) == h3_plus_w.span_of("W")


def test_bracket_witness(h3, degenerate_triple, h3_plus_w):
    a = h3.algebra
    t = make_triple(ContactPair(a, h3.subspaces["l0"]), a.zero())
    w = bracket_witness(t, a.basis_vector("X"))
    assert len(w.sequence) == 1
    assert list(w.value) == list(a.basis_vector("Z"))
    assert not t.l0.contains(w.value)
    assert bracket_witness(degenerate_triple, h3_plus_w.basis_vector("W")) is None


def test_bracket_witness_rejects_isotropy(sl2):
    a = sl2.algebra
    t = make_triple(ContactPair(a, a.full()), sl2.subspaces["h0"])
    with pytest.raises(PreconditionViolated):
        bracket_witness(t, a.basis_vector("E"))


def test_similitude_has_degeneracy_order_one(similitude):
    c = CRAlgebra(similitude.algebra, similitude.subspaces["q"])
    result = classify(c)
    assert result.fundamental
    assert result.transitive
    assert result.contact_strict is False
    assert result.k == 1


def test_sphere_chains(h3):
    c = CRAlgebra(h3.algebra, h3.subspaces["q"])
    chain = cr_chains(c)
    assert chain.length == 1
    assert chain.hull == c.q
    assert chain.qbar_terms[1].is_zero()
    assert weak_nondegenerate(c, chain)
    assert nu(c) == 1
    assert wn_hull(c) is c


def test_sphere_classification(h3):
    result = classify(CRAlgebra(h3.algebra, h3.subspaces["q"]))
    assert result.fundamental
    assert result.strict
    assert result.weak
    assert result.nu == 1
    assert result.k == 0
    assert result.contact_nondegenerate


def test_sphere_associated_triple(h3):
    t = associated_triple(CRAlgebra(h3.algebra, h3.subspaces["q"]))
    assert t.h0.is_zero()
    assert t.l0 == h3.subspaces["l0"]


def test_conjugation_stable_q_is_its_own_hull(h3):
    q = Subspace.span([h3.algebra.basis_vector("X")], 3, QI)
    c = CRAlgebra(h3.algebra, q)
    chain = cr_chains(c)
    assert chain.length == 0
    assert chain.hull == q
    assert weak_nondegenerate(c, chain)


def test_non_fundamental_cr_algebra():
    a = preset("abelian:2").algebra
    c = CRAlgebra(a, Subspace.span([[Gaussian(1), Gaussian(0)]], 2, QI))
    with pytest.raises(NotFundamental):
        associated_triple(c)
    result = classify(c)
    assert not result.fundamental
    assert result.k is None


def test_cr_algebra_input_checks(h3):
    a = h3.algebra
    bad = Subspace.span([[Gaussian(1), -I, Gaussian(0)], [Gaussian(0), Gaussian(1), Gaussian(0)]], 3, QI)
    with pytest.raises(QNotSubalgebra):
        CRAlgebra(a, bad)
    with pytest.raises(AmbientMismatch):
        CRAlgebra(a, Subspace.span([[Gaussian(1), -I]], 2, QI))


def test_su15_classification(su15):
    c = CRAlgebra(su15.algebra, su15.subspaces["q"])
    result = classify(c)
    assert result.fundamental
    assert result.transitive
    assert not result.weak
    assert result.nu == math.inf
    assert result.k != math.inf
    assert result.contact_nondegenerate
    assert largest_ideal_in(su15.algebra, c.tilde0).is_zero()
    assert wn_hull(c).q == su15.subspaces["q_prime"]
