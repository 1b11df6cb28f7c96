import pytest

from crlab.chains import CRAlgebra
from crlab.errors import AmbientMismatch, ComplementInvalid, NotSubalgebra
from crlab.formal import (
    StarRealization,
    TruncatedVectorField,
    anti_homomorphism_defects,
    invariant_fields,
    realization_kernel,
    star_fields,
)
from crlab.lie import largest_ideal_in, preset


@pytest.fixture
def sl2_realization(sl2):
    return StarRealization(sl2.algebra, sl2.subspaces["h0"])


def test_abelian_fields_are_constant():
    a = preset("abelian:3").algebra
    x = [1, 2, 3]
    left, right = invariant_fields(a, x, 3)
    constant = TruncatedVectorField(3, 3, {(): x})
    assert left == constant
    assert right == constant


def test_central_fields_are_constant(h3):
    a = h3.algebra
    z = a.basis_vector("Z")
    left, right = invariant_fields(a, z, 3)
    assert left == right == TruncatedVectorField(3, 3, {(): z})


def test_heisenberg_right_field_low_degrees(h3):
    a = h3.algebra
    _, right = invariant_fields(a, a.basis_vector("X"), 3)
    assert list(right.value_at_zero()) == [1, 0, 0]
    # the linear part is -1/2 ad(v) X = -1/2 [v, X]; only v = Y contributes
    linear = right.component(1)
    assert set(linear) == {(1,)}
    assert [str(c) for c in linear[(1,)]] == ["0", "0", "1/2"]


def test_reflection_identity(h3, sl2):
    for a in (h3.algebra, sl2.algebra):
        for i in range(a.dim):
            left, right = invariant_fields(a, a.basis_vector(i), a.dim)
            assert right.reflect() == left


def test_trivial_isotropy_has_no_correction(h3):
    a = h3.algebra
    (right, correction), _ = star_fields(a, a.zero(), a.basis_vector("Y"), 3)
    assert correction.is_zero()
    assert right == invariant_fields(a, a.basis_vector("Y"), 3)[1]


def test_values_at_zero(sl2_realization):
    r = sl2_realization
    a = r.algebra
    for i in range(a.dim):
        x = a.basis_vector(i)
        assert list(r.right(x).value_at_zero()) == list(r.project(x))
        assert list(r.right_correction(x).value_at_zero()) == list(x - r.include(r.project(x)))
    assert not any(r.right(a.basis_vector("E")).value_at_zero())


def test_left_field_vanishes_on_isotropy(sl2_realization, similitude):
    r = sl2_realization
    assert r.left(r.algebra.basis_vector("E")).is_zero()
    a = similitude.algebra
    h0 = a.span_of("D")
    s = StarRealization(a, h0, order=3)
    assert s.left(a.basis_vector("D")).is_zero()


def test_anti_homomorphism_on_small_algebras(sl2_realization, h3):
    assert anti_homomorphism_defects(sl2_realization) == []
    a = h3.algebra
    assert anti_homomorphism_defects(StarRealization(a, a.zero())) == []
    assert anti_homomorphism_defects(StarRealization(a, a.span_of("Z"))) == []


def test_anti_homomorphism_with_explicit_complement(sl2):
    a = sl2.algebra
    r = StarRealization(a, sl2.subspaces["h0"], complement=[[1, 0, 0], [0, 1, 1]])
    assert anti_homomorphism_defects(r) == []


def test_anti_homomorphism_on_similitude(similitude):
    a = similitude.algebra
    assert anti_homomorphism_defects(StarRealization(a, a.span_of("R"), order=3)) == []


@pytest.mark.slow
def test_anti_homomorphism_on_su15(su15):
    """Order 2 on the 35-dimensional algebra.

    Monomials of order n in 35 variables number C(34 + n, n): 630 at order 2
    and 7770 at order 3. Orders past 2 are covered on the small presets.
    """
    c = CRAlgebra(su15.algebra, su15.subspaces["q"])
    r = StarRealization(su15.algebra, c.breve0, order=2)
    assert anti_homomorphism_defects(r) == []


def test_realization_kernel(sl2_realization, h3):
    assert realization_kernel(sl2_realization).is_zero()
    a = h3.algebra
    assert realization_kernel(StarRealization(a, a.span_of("Z"))) == a.span_of("Z")
    assert realization_kernel(StarRealization(a, a.zero())).is_zero()
    assert realization_kernel(StarRealization(a, a.span_of("X"))).is_zero()


def test_realization_kernel_matches_largest_ideal(similitude):
    a = similitude.algebra
    for labels in (("R",), ("D",), ("D", "R"), ("Z",), ("X", "Z")):
        h0 = a.span_of(*labels)
        r = StarRealization(a, h0)
        assert realization_kernel(r) == largest_ideal_in(a, h0)


def test_realization_input_checks(sl2):
    a = sl2.algebra
    with pytest.raises(NotSubalgebra):
        StarRealization(a, a.span_of("E", "F"))
    with pytest.raises(ComplementInvalid):
        StarRealization(a, sl2.subspaces["h0"], complement=[[0, 1, 0], [1, 0, 0]])
    with pytest.raises(ComplementInvalid):
        StarRealization(a, sl2.subspaces["h0"], complement=[[1, 0, 0]])
    with pytest.raises(AmbientMismatch):
        StarRealization(a, preset("heisenberg:2").algebra.zero())


def test_to_json_tables(sl2_realization):
    out = sl2_realization.to_json(["H"], order=2)
    assert out["order"] == 2
    assert set(out["fields"]) == {"H"}
    right = out["fields"]["H"]["right"]
    assert right["dim_in"] == 2
    assert set(right["components"]) <= {"0", "1", "2"}
