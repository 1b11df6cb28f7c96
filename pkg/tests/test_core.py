import random
from fractions import Fraction

import pytest

from crlab.core import QI, Gaussian, LinearCoordinates, Matrix, Q, Subspace, format_scalar, nullspace, parse_scalar, rref
from crlab.core.scalars import I, field_of
from crlab.errors import AmbientMismatch


def e(i, n=3, field=Q):
    v = [0] * n
    v[i] = 1
    return [field.coerce(x) for x in v]


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", Fraction(3)),
        ("-2/4", Fraction(-1, 2)),
        ("i", Gaussian(0, 1)),
        ("-i", Gaussian(0, -1)),
        ("1/2+3*i", Gaussian(Fraction(1, 2), 3)),
        ("2-i", Gaussian(2, -1)),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value
    assert parse_scalar(format_scalar(value)) == value


def test_gaussian_arithmetic():
    z = Gaussian(1, 2)
    assert z * z.conjugate() == 5
    assert (z / z) == 1
    assert I * I == -1
    assert Gaussian(3, 0) == Fraction(3)


def test_field_of_rejects_unknown_names():
    assert field_of("Q(i)") is QI
    with pytest.raises(ValueError):
        field_of("R")


def test_rref_examples():
    identity = Matrix.identity(2, Q)
    assert rref(identity) == identity
    m = Matrix([[2, 4], [1, 2]], Q)
    assert rref(m).to_lists() == [["1", "2"], ["0", "0"]]


def test_rref_is_idempotent_on_random_matrices():
    rng = random.Random(7)
    for _ in range(20):
        m = Matrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(5)] for _ in range(5)], Q)
        once = rref(m)
        assert rref(once) == once


def test_nullspace_annihilates_rows():
    m = Matrix([[1, 2, 3], [2, 4, 6]], Q)
    kernel = nullspace(m)
    assert len(kernel) == 2
    for v in kernel:
        for r in range(m.rows):
            assert sum(a * b for a, b in zip(m.row(r), v)) == 0


def test_span_sum_and_intersection():
    e1, e2, e3 = e(0), e(1), e(2)
    a = Subspace.span([e1], 3, Q)
    b = Subspace.span([e2], 3, Q)
    assert a + b == Subspace.span([e1, e2], 3, Q)
    assert a + a == a
    plus = Subspace.span([[1, 1, 0]], 3, Q) + Subspace.span([[1, -1, 0]], 3, Q)
    assert plus == Subspace.span([e1, e2], 3, Q)
    full = Subspace.full(3, Q)
    assert (plus & full) == plus
    assert (Subspace.span([e1, e2], 3, Q) & Subspace.span([e2, e3], 3, Q)) == b


def test_containment_and_order():
    s = Subspace.span([e(0), e(1)], 3, Q)
    assert s.contains(e(0))
    assert not s.contains(e(2))
    assert Subspace.span([e(0)], 3, Q) < s
    assert s <= Subspace.full(3, Q)
    assert not Subspace.full(3, Q) <= s


def test_basis_is_canonical():
    a = Subspace.span([[1, 2, 3], [0, 1, 1]], 3, Q)
    b = Subspace.span([[1, 3, 4], [2, 5, 7]], 3, Q)
    assert a == b
    assert hash(a) == hash(b)
    assert a.to_json() == b.to_json()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace.span([[1, 0]], 3, Q)
    with pytest.raises(AmbientMismatch):
        Subspace.zero(2, Q) + Subspace.zero(3, Q)


def test_complex_subspace_conjugate_and_real_parts():
    q = Subspace.span([[Gaussian(1), -I, Gaussian(0)]], 3, QI)
    assert q.conjugate() != q
    assert (q & q.conjugate()).is_zero()
    assert q.real_and_imaginary_parts(Q) == Subspace.span([e(0), e(1)], 3, Q)


def test_linear_coordinates_solve():
    vectors = [[Fraction(1), Fraction(0), Fraction(1)], [Fraction(0), Fraction(1), Fraction(1)]]
    lc = LinearCoordinates(vectors, 3, Q)
    assert lc.rank == 2
    coeffs = lc.solve([2, 3, 5])
    assert list(coeffs) == [2, 3]
    assert lc.solve([1, 0, 0]) is None
