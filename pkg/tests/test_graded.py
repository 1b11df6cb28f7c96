import pytest

from crlab.chains import ContactPair, CRAlgebra, contact_filtration
from crlab.errors import DepthTooSmall, PreconditionViolated
from crlab.graded import (
    TabulatedGradedAlgebra,
    associated_graded,
    check_jacobi,
    complex_structure,
    eta_map,
    g_prime,
    is_fundamental,
    is_transitive,
    levi_form,
    levi_nondegenerate,
)
from crlab.lie import preset


def graded_of(p, l0_key="l0"):
    return associated_graded(contact_filtration(ContactPair(p.algebra, p.subspaces[l0_key])))


def test_heisenberg_graded(h3):
    g = graded_of(h3)
    assert g.dims == {-2: 1, -1: 2}
    assert g.labels(-1) == ["X", "Y"]
    assert check_jacobi(g) is None
    assert is_fundamental(g)
    assert is_transitive(g)


def test_filiform_graded():
    p = preset("filiform:4")
    g = graded_of(p)
    assert g.dims == {-3: 1, -2: 1, -1: 2}
    assert g.dim(0) == 0
    assert is_fundamental(g)


def test_similitude_graded(similitude):
    g = graded_of(similitude)
    assert g.dims == {-2: 1, -1: 2, 0: 2}
    assert check_jacobi(g) is None
    assert is_transitive(g)


def test_depth_zero_graded_is_the_whole_algebra(h3):
    a = h3.algebra
    g = associated_graded(contact_filtration(ContactPair(a, a.full())))
    assert g.dims == {0: 3}
    assert g.depth == 0
    assert g.labels(0) == ["X", "Y", "Z"]
    assert list(g.bracket(0, g.basis_vector(0, 0), 0, g.basis_vector(0, 1))) == [0, 0, 1]
    assert check_jacobi(g) is None


def test_projection_inverts_lift(h3):
    g = graded_of(h3)
    x = g.basis_vector(-1, 1)
    assert list(g.project(-1, g.lift(-1, x))) == list(x)


def test_levi_form_of_heisenberg(h3):
    omega = levi_form(graded_of(h3))
    assert [str(c) for c in omega(omega.graded.basis_vector(-1, 0), omega.graded.basis_vector(-1, 1))] == ["1"]
    assert omega.is_alternating()
    assert omega.is_nondegenerate()


def test_levi_form_of_h5_is_nondegenerate():
    p = preset("heisenberg:2")
    assert levi_nondegenerate(graded_of(p))


def test_levi_form_with_central_direction_is_degenerate():
    # G_-1 = span{X, Y, W} with W central
    g = TabulatedGradedAlgebra({-2: 1, -1: 3}, {(-1, 0, -1, 1): [1]})
    omega = levi_form(g)
    assert not omega.is_nondegenerate()
    assert omega.kernel().dim == 1
    assert omega.kernel().contains([0, 0, 1])


def test_levi_form_needs_depth_two():
    with pytest.raises(DepthTooSmall):
        levi_form(TabulatedGradedAlgebra.abelian(2))


def test_transitivity():
    faithful = TabulatedGradedAlgebra({-1: 1, 0: 1}, {(0, 0, -1, 0): [1]})
    assert is_transitive(faithful)
    trivial_summand = TabulatedGradedAlgebra({-1: 1, 0: 2}, {(0, 0, -1, 0): [1]})
    assert not is_transitive(trivial_summand)


def test_fundamental_needs_degree_minus_one():
    assert not is_fundamental(TabulatedGradedAlgebra({-2: 1}))
    assert not is_fundamental(TabulatedGradedAlgebra({-2: 1, -1: 1}))


def test_g_prime_of_depth_one_is_everything():
    g = TabulatedGradedAlgebra({-1: 2, 0: 1}, {(0, 0, -1, 0): [1, 0], (0, 0, -1, 1): [0, 1]})
    primes = g_prime(g)
    assert all(primes[p].is_full() for p in g.degrees)


def test_g_prime_of_heisenberg(h3):
    primes = g_prime(graded_of(h3))
    # [G_-1, G_-2] lands in G_-3 = 0
    assert primes[-1].is_full()
    assert primes[-2].is_full()


def test_sphere_complex_structure(h3):
    c = CRAlgebra(h3.algebra, h3.subspaces["q"])
    g = associated_graded(contact_filtration(c.contact_pair()))
    j = complex_structure(c, g)
    assert j.squares_to_minus_one()
    assert j.check_levi_identities(g) == []
    # X - iY in q: J(X) = -Y, J(Y) = X
    assert list(j(g.basis_vector(-1, 0))) == [0, -1]
    assert list(j(g.basis_vector(-1, 1))) == [1, 0]


def test_complex_structure_rejects_foreign_graded(h3):
    c = CRAlgebra(h3.algebra, h3.subspaces["q"])
    g = associated_graded(contact_filtration(ContactPair(h3.algebra, h3.algebra.full())))
    with pytest.raises(PreconditionViolated):
        complex_structure(c, g)


def test_eta_map_of_degree_zero_element(similitude):
    g = graded_of(similitude)
    eta = g.basis_vector(0, 0)
    m = eta_map(g, 0, eta, 1)
    assert m.arity == 1
    assert m.dim_out == 2
