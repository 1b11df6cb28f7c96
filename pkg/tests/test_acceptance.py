"""End-to-end checks on the reference models.

The polynomial vector field model lives in test_prolong.py, the agreement of
truncated symmetries with the prolongation in test_modules.py and the random
structural suite in test_fuzz.py.
"""
import math

import pytest

from crlab.chains import CRAlgebra, classify, contact_filtration, wn_hull
from crlab.formal import StarRealization, anti_homomorphism_defects, realization_kernel
from crlab.graded import associated_graded, complex_structure, finiteness_check, tanaka_prolong
from crlab.lie import largest_ideal_in, preset


def j_linear(p):
    c = CRAlgebra(p.algebra, p.subspaces["q"])
    g = associated_graded(contact_filtration(c.contact_pair()))
    return c, tanaka_prolong(g, j=complex_structure(c, g).matrix)


def test_su15_is_contact_nondegenerate_but_not_weakly(su15):
    a = su15.algebra
    c = CRAlgebra(a, su15.subspaces["q"])
    result = classify(c)
    assert result.fundamental
    assert not result.weak
    assert result.nu == math.inf
    assert result.contact_nondegenerate
    assert largest_ideal_in(a, c.tilde0).is_zero()
    hull = wn_hull(c)
    assert c.q < hull.q
    assert hull.q.dim == c.q.dim + 1
    assert hull.q == su15.subspaces["q_prime"]


@pytest.mark.parametrize("name, k", [("heisenberg:1", 0), ("similitude", 1)])
def test_g_prime_vanishes_at_2k_plus_1(name, k):
    c, pro = j_linear(preset(name))
    assert classify(c).k == k
    verdict = finiteness_check(pro, k)
    assert verdict.g_prime_dims.get(2 * k + 1, 0) == 0
    assert verdict.g_prime_vanishes


@pytest.mark.parametrize("name", ["heisenberg:1", "heisenberg:2", "similitude"])
def test_contact_nondegenerate_fixtures_have_finite_prolongation(name):
    c, pro = j_linear(preset(name))
    assert classify(c).contact_nondegenerate
    assert pro.terminated
    assert finiteness_check(pro, classify(c).k).finite


@pytest.mark.slow
def test_su15_prolongation_terminates(su15):
    c, pro = j_linear(su15)
    assert pro.terminated
    assert finiteness_check(pro, classify(c).k).finite


@pytest.mark.parametrize(
    "name, isotropy",
    [
        ("sl2", ()),
        ("sl2", ("E",)),
        ("sl2", ("H",)),
        ("sl2", ("H", "E")),
        ("heisenberg:1", ()),
        ("heisenberg:1", ("X",)),
        ("heisenberg:1", ("Z",)),
    ],
)
def test_right_fields_are_an_anti_homomorphism(name, isotropy):
    a = preset(name).algebra
    r = StarRealization(a, a.span_of(*isotropy))
    assert r.order == a.dim
    assert anti_homomorphism_defects(r) == []


@pytest.mark.parametrize(
    "name, isotropy",
    [
        ("sl2", ("E",)),
        ("sl2", ("H", "E")),
        ("heisenberg:1", ("Z",)),
        ("heisenberg:1", ("X", "Z")),
        ("similitude", ("D", "R")),
    ],
)
def test_realization_kernel_is_the_largest_ideal(name, isotropy):
    a = preset(name).algebra
    h0 = a.span_of(*isotropy)
    assert realization_kernel(StarRealization(a, h0)) == largest_ideal_in(a, h0)


def test_non_transitive_pair_kernel_is_the_center(h3):
    a = h3.algebra
    kernel = realization_kernel(StarRealization(a, a.span_of("Z")))
    assert kernel == h3.subspaces["center"] == largest_ideal_in(a, a.span_of("Z"))
