from math import comb

import pytest

from crlab.chains import CRAlgebra, contact_filtration
from crlab.errors import ModuleConditionsViolated
from crlab.formal import (
    StarRealization,
    TruncatedMap,
    check_module_conditions,
    in_module,
    mixed_bracket_in_module,
    module_coefficients,
    module_generated,
    orbit_closure,
    truncated_symmetries,
)
from crlab.graded import associated_graded, complex_structure, tanaka_prolong


@pytest.fixture
def h3_realization(h3):
    return StarRealization(h3.algebra, h3.algebra.zero(), order=4)


def test_contact_module_recovers_l0(h3, h3_realization):
    module = module_generated(h3_realization, h3.subspaces["l0"])
    assert len(module.generators) == 2
    assert module.recovered == h3.subspaces["l0"]


def test_full_module_recovers_everything(h3, h3_realization):
    module = module_generated(h3_realization, h3.algebra.full())
    assert module.recovered.is_full()


def test_complex_module_recovers_q(h3, h3_realization):
    module = module_generated(h3_realization, h3.subspaces["q"])
    assert module.recovered == h3.subspaces["q"]
    assert module.field.is_complex


def test_module_with_isotropy(sl2):
    a = sl2.algebra
    r = StarRealization(a, sl2.subspaces["h0"], order=3)
    module = module_generated(r, a.span_of("H", "E"))
    assert len(module.generators) == 1
    assert module.recovered == a.span_of("H", "E")


def test_module_conditions(sl2):
    a = sl2.algebra
    r = StarRealization(a, sl2.subspaces["h0"])
    check_module_conditions(r, a.full())
    with pytest.raises(ModuleConditionsViolated):
        check_module_conditions(r, a.span_of("H"))
    with pytest.raises(ModuleConditionsViolated):
        check_module_conditions(r, a.span_of("E", "F"))


def test_module_membership(h3, h3_realization):
    module = module_generated(h3_realization, h3.subspaces["l0"])
    g0, g1 = module.generators
    assert in_module(g0, module.generators)
    coeffs = module_coefficients(g0 - g1, module.generators)
    assert coeffs is not None
    assert coeffs[0].value_at_zero() == 1
    assert coeffs[1].value_at_zero() == -1
    z = TruncatedMap.constant(3, [0, 0, 1], 4)
    assert not in_module(z, module.generators)


def test_orbit_closure(sl2):
    a = sl2.algebra
    r = StarRealization(a, sl2.subspaces["h0"])
    assert orbit_closure(r, a.basis_vector("E")) == a.span_of("E")
    assert orbit_closure(r, a.basis_vector("F")).is_full()


def test_mixed_brackets_stay_in_module(sl2, h3):
    a = sl2.algebra
    r = StarRealization(a, sl2.subspaces["h0"], order=3)
    for x in ("H", "E", "F"):
        for y in ("H", "F"):
            assert mixed_bracket_in_module(r, a.basis_vector(x), a.basis_vector(y))
    b = h3.algebra
    s = StarRealization(b, b.zero(), order=3)
    assert mixed_bracket_in_module(s, b.basis_vector("X"), b.basis_vector("Y"))


def test_sphere_symmetries_match_prolongation(h3, h3_realization):
    table = truncated_symmetries(h3_realization, h3.subspaces["q"], order=10)
    assert table.stabilized
    assert len(table.rows) <= 10
    assert table.jet_dims[-3:] == [table.dimension] * 3
    c = CRAlgebra(h3.algebra, h3.subspaces["q"])
    g = associated_graded(contact_filtration(c.contact_pair()))
    pro = tanaka_prolong(g, j=complex_structure(c, g).matrix)
    assert table.dimension == pro.total_dim == 8


def test_contact_symmetries_keep_growing(h3, h3_realization):
    table = truncated_symmetries(h3_realization, h3.subspaces["l0"], order=5)
    assert not table.stabilized
    assert table.dimension is None
    assert table.jet_dims[-1] > 8


def test_trivial_distribution_admits_every_field(h3, h3_realization):
    table = truncated_symmetries(h3_realization, h3.algebra.full(), order=2)
    assert table.raw_dims == [3 * comb(n + 3, 3) for n in (1, 2)]


def test_symmetry_table_json(h3, h3_realization):
    table = truncated_symmetries(h3_realization, h3.subspaces["l0"], order=2)
    out = table.to_json()
    assert [row["order"] for row in out["rows"]] == [1, 2]
    assert out["stable_run"] == 3
    assert out["stabilized"] is False
