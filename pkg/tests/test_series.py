from fractions import Fraction

import pytest

from crlab.core.scalars import Q
from crlab.errors import OrderExhausted
from crlab.formal import TruncatedMap, TruncatedSeries, TruncatedVectorField, bch_coefficients, vf_bracket
from crlab.formal.series import multinomial


def test_bch_coefficients():
    b = bch_coefficients(4)
    assert list(b) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]
    assert b.order == 4
    assert b.check()
    assert b.to_json() == ["1", "1/2", "1/12", "0", "-1/720"]


def test_bch_coefficients_match_sympy_series():
    sympy = pytest.importorskip("sympy")
    t = sympy.symbols("t")
    series = sympy.series(t / (1 - sympy.exp(-t)), t, 0, 11).removeO()
    b = bch_coefficients(10)
    for h in range(11):
        expected = sympy.Rational(series.coeff(t, h))
        assert Fraction(int(expected.p), int(expected.q)) == b[h]


def test_bch_rejects_negative_order():
    with pytest.raises(ValueError):
        bch_coefficients(-1)


def test_series_product_and_derivative():
    x = TruncatedSeries.variable(2, 3, 0)
    y = TruncatedSeries.variable(2, 3, 1)
    f = x * x * y + TruncatedSeries.constant(2, 3, 5)
    assert f.evaluate([2, 3]) == 17
    df = f.derivative([1, 0])
    assert df.order == 2
    assert df.evaluate([2, 3]) == 12
    assert (x * x * x * x).is_zero()


def test_series_derivative_needs_order():
    with pytest.raises(OrderExhausted):
        TruncatedSeries.constant(1, 0, 1).derivative([1])


def test_tensor_divides_by_multinomial():
    m = TruncatedMap(2, 1, 2, {(0, 1): [2], (0, 0): [3]})
    assert multinomial((0, 1)) == 2
    assert list(m.tensor((1, 0))) == [1]
    assert list(m.tensor((0, 0))) == [3]
    assert m.is_symmetric()


def test_directional_derivative_convention():
    # alpha(v, v) with alpha(e0, e1) = 1: D_v alpha at w is 2 alpha(w, v)
    alpha = TruncatedMap(2, 1, 2, {(0, 1): [2]})
    along = TruncatedVectorField(2, 2, {(): [1, 0]})
    d = alpha.directional(along)
    assert d.order == 1
    assert list(d.evaluate([0, 1])) == [2]


def test_constant_fields_commute():
    u = TruncatedVectorField(3, 2, {(): [1, 2, 3]})
    w = TruncatedVectorField(3, 2, {(): [0, -1, 4]})
    assert vf_bracket(u, w).is_zero()


def test_linear_fields_bracket_to_commutator():
    p = [[1, 2, 0], [0, 1, -1], [3, 0, 0]]
    q = [[0, 1, 1], [2, 0, 0], [0, -1, 1]]
    a = TruncatedVectorField.linear(p, order=2)
    b = TruncatedVectorField.linear(q, order=2)

    def mul(x, y):
        return [[sum(Fraction(x[i][k]) * y[k][j] for k in range(3)) for j in range(3)] for i in range(3)]

    qp, pq = mul(q, p), mul(p, q)
    expected = TruncatedVectorField.linear([[qp[i][j] - pq[i][j] for j in range(3)] for i in range(3)], order=1)
    assert vf_bracket(a, b) == expected


def test_bracket_is_antisymmetric():
    a = TruncatedVectorField(2, 3, {(): [1, 0], (0, 1): [0, 1]})
    b = TruncatedVectorField(2, 3, {(0,): [1, 1], (1, 1): [2, 0]})
    assert vf_bracket(a, b) == -vf_bracket(b, a)


def test_bracket_of_order_zero_fields_is_undefined():
    u = TruncatedVectorField(1, 0, {(): [1]})
    with pytest.raises(OrderExhausted):
        vf_bracket(u, u)


def test_reflection_flips_odd_degrees():
    m = TruncatedMap(2, 2, 3, {(): [1, 1], (0,): [1, 0], (0, 1): [0, 1], (1, 1, 1): [1, 1]})
    r = m.reflect()
    v = [Fraction(2), Fraction(-3)]
    assert list(r.evaluate(v)) == list(m.evaluate([-x for x in v]))


def test_apply_is_a_derivation():
    x = TruncatedSeries.variable(2, 3, 0)
    y = TruncatedSeries.variable(2, 3, 1)
    field = TruncatedVectorField(2, 3, {(1,): [1, 0], (0,): [0, -1]})
    lhs = field.apply(x * y)
    assert lhs == field.apply(x) * y + x * field.apply(y)
    assert lhs.evaluate([1, 2]) == 2 * 2 - 1 * 1


def test_times_series_and_linear_combination():
    g = TruncatedVectorField(2, 2, {(): [1, 0]})
    f = TruncatedSeries.variable(2, 2, 1)
    scaled = g.times_series(f)
    assert list(scaled.evaluate([0, 3])) == [3, 0]
    combo = TruncatedMap.linear_combination([2, -1], [g, scaled])
    assert list(combo.evaluate([0, 3])) == [-1, 0]
    assert combo.field == Q
