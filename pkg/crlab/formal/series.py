"""Truncated formal power series, polynomial maps and vector fields.

A homogeneous component of degree ``h`` is stored as a polynomial: a mapping
from sorted index tuples (monomials ``x_{i1} ... x_{ih}``) to coefficients.
The symmetric ``h``-linear form with the same restriction to the diagonal is
recovered by :meth:`TruncatedMap.tensor`, which divides by the multinomial
count of the monomial. With this normalization ``D_v`` is the usual
directional derivative, ``(D_v α)(v_1, ..., v_{h-1}) = h·α(v_1, ..., v_{h-1}, v)``.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from crlab.core.matrix import as_vector, zeros
from crlab.core.scalars import Field, Q, QI, Gaussian
from crlab.errors import AmbientMismatch, OrderExhausted, jsonable

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def monomials(dim: int, degree: int) -> List[Monomial]:
    return list(combinations_with_replacement(range(dim), degree))


def monomials_up_to(dim: int, order: int) -> List[Monomial]:
    return [m for h in range(order + 1) for m in monomials(dim, h)]


def times(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def derivative(m: Monomial, j: int) -> Tuple[int, Monomial]:
    """``∂_j x^m = count · x^{m'}``; count 0 when ``x_j`` does not occur."""
    count = m.count(j)
    if not count:
        return 0, m
    k = m.index(j)
    return count, m[:k] + m[k + 1:]


def multinomial(m: Monomial) -> int:
    out = math.factorial(len(m))
    for c in Counter(m).values():
        out //= math.factorial(c)
    return out


def _field_for(values: Iterable) -> Field:
    return QI if any(isinstance(x, Gaussian) and x.im for x in values) else Q


@lru_cache(maxsize=None)
def _bch(n: int) -> Tuple[Fraction, ...]:
    # (1 - e^{-t}) / t = Σ (-1)^k t^k / (k+1)!
    f = [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(n + 1)]
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum((f[k] * b[m - k] for k in range(1, m + 1)), Fraction(0)))
    return tuple(b)


class BchCoefficients(tuple):
    """``b_0 ... b_N`` with ``Σ b_h t^h = t / (1 - e^{-t})``."""

    @property
    def order(self) -> int:
        return len(self) - 1

    def check(self) -> bool:
        """The defining identity ``(Σ b_h t^h)·(1 - e^{-t})/t = 1`` up to order N."""
        f = [Fraction((-1) ** k, math.factorial(k + 1)) for k in range(len(self))]
        product = [sum((self[k] * f[m - k] for k in range(m + 1)), Fraction(0)) for m in range(len(self))]
        return product[0] == 1 and not any(product[1:])

    def to_json(self) -> List[str]:
        return jsonable(list(self))


def bch_coefficients(n: int) -> BchCoefficients:
    """Exact coefficients by series inversion of ``(1 - e^{-t})/t``."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return BchCoefficients(_bch(n))


class TruncatedSeries:
    """Scalar formal power series on ``field^dim`` keeping degrees ``0..order``."""

    def __init__(self, dim: int, order: int, terms: Optional[Dict[Monomial, object]] = None, field: Field = Q):
        self.dim = dim
        self.order = order
        self.field = field
        acc: Dict[Monomial, object] = {}
        for m, c in (terms or {}).items():
            if len(m) <= order:
                key = tuple(sorted(m))
                acc[key] = acc.get(key, field.zero) + field.coerce(c)
        self.terms: Dict[Monomial, object] = {m: c for m, c in acc.items() if c}

    @classmethod
    def constant(cls, dim: int, order: int, value, field: Field = Q) -> "TruncatedSeries":
        return cls(dim, order, {(): value}, field)

    @classmethod
    def variable(cls, dim: int, order: int, index: int, field: Field = Q) -> "TruncatedSeries":
        return cls(dim, order, {(index,): 1} if order >= 1 else {}, field)

    def component(self, h: int) -> Dict[Monomial, object]:
        return {m: c for m, c in self.terms.items() if len(m) == h}

    def value_at_zero(self):
        return self.terms.get((), self.field.zero)

    def tensor(self, idx: Sequence[int]):
        m = tuple(sorted(idx))
        return self.terms.get(m, self.field.zero) / multinomial(m)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.dim != other.dim:
            raise AmbientMismatch("series in different numbers of variables", left=self.dim, right=other.dim)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        field = QI if QI in (self.field, other.field) else Q
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, field.zero) + c
        return TruncatedSeries(self.dim, min(self.order, other.order), terms, field)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.dim, self.order, {m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            field = QI if isinstance(other, Gaussian) else self.field
            return TruncatedSeries(self.dim, self.order, {m: c * other for m, c in self.terms.items()}, field)
        self._check(other)
        order = min(self.order, other.order)
        field = QI if QI in (self.field, other.field) else Q
        terms: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if len(m1) + len(m2) <= order:
                    m = times(m1, m2)
                    terms[m] = terms.get(m, field.zero) + c1 * c2
        return TruncatedSeries(self.dim, order, terms, field)

    __rmul__ = __mul__

    def derivative(self, v: Sequence) -> "TruncatedSeries":
        """``D_v``; one order is consumed."""
        if self.order == 0:
            raise OrderExhausted("cannot differentiate an order-0 series")
        terms: Dict[Monomial, object] = {}
        for m, c in self.terms.items():
            for j in set(m):
                if v[j]:
                    count, rest = derivative(m, j)
                    terms[rest] = terms.get(rest, self.field.zero) + count * c * v[j]
        return TruncatedSeries(self.dim, self.order - 1, terms, _field_for(list(terms.values())) if terms else self.field)

    def evaluate(self, v: Sequence):
        total = self.field.zero
        for m, c in self.terms.items():
            term = c
            for j in m:
                term = term * v[j]
            total = total + term
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.dim == other.dim and self.order == other.order and (self - other).is_zero()

    def __repr__(self):
        return f"TruncatedSeries(dim={self.dim}, order={self.order}, terms={len(self.terms)})"


class TruncatedMap:
    """Polynomial map ``field^dim_in → field^dim_out`` truncated after degree ``order``."""

    def __init__(
        self,
        dim_in: int,
        dim_out: int,
        order: int,
        terms: Optional[Dict[Monomial, Sequence]] = None,
        field: Field = Q,
    ):
        self.dim_in = dim_in
        self.dim_out = dim_out
        self.order = order
        self.field = field
        self.terms: Dict[Monomial, np.ndarray] = {}
        for m, v in (terms or {}).items():
            if len(m) > order:
                continue
            v = as_vector(v, field)
            if len(v) != dim_out:
                raise AmbientMismatch(f"coefficient of length {len(v)}, expected {dim_out}", expected=dim_out)
            key = tuple(sorted(m))
            if key in self.terms:
                v = self.terms[key] + v
            if any(v):
                self.terms[key] = v
            else:
                self.terms.pop(key, None)

    @classmethod
    def zero(cls, dim_in: int, dim_out: int, order: int, field: Field = Q):
        return cls(dim_in, dim_out, order, {}, field)

    @classmethod
    def constant(cls, dim_in: int, value: Sequence, order: int, field: Field = Q):
        return cls(dim_in, len(value), order, {(): value}, field)

    @classmethod
    def linear_combination(cls, coefficients: Sequence, maps: Sequence["TruncatedMap"], field: Optional[Field] = None):
        """``Σ c_a M_a`` for maps sharing dimensions and order."""
        first = maps[0]
        field = field or (QI if any(isinstance(c, Gaussian) and c.im for c in coefficients) or any(m.field.is_complex for m in maps) else Q)
        terms: Dict[Monomial, np.ndarray] = {}
        for c, mp in zip(coefficients, maps):
            if not c:
                continue
            for m, v in mp.terms.items():
                value = as_vector([c * x for x in v], field)
                terms[m] = terms[m] + value if m in terms else value
        return cls(first.dim_in, first.dim_out, min(mp.order for mp in maps), terms, field)

    def component(self, h: int) -> Dict[Monomial, np.ndarray]:
        return {m: v for m, v in self.terms.items() if len(m) == h}

    def value_at_zero(self) -> np.ndarray:
        return self.terms.get((), zeros(self.dim_out, self.field)).copy()

    def tensor(self, idx: Sequence[int]) -> np.ndarray:
        """Symmetric multilinear coefficient on basis vectors ``e_{i1}, ..., e_{ih}``."""
        m = tuple(sorted(idx))
        v = self.terms.get(m)
        if v is None:
            return zeros(self.dim_out, self.field)
        return as_vector([x / multinomial(m) for x in v], self.field)

    def truncate(self, order: int) -> "TruncatedMap":
        return type(self)._build(self, order, self.terms, self.field)

    @classmethod
    def _build(cls, like: "TruncatedMap", order: int, terms, field: Field):
        return cls(like.dim_in, like.dim_out, order, terms, field)

    def _merge_field(self, other: "TruncatedMap") -> Field:
        return QI if self.field.is_complex or other.field.is_complex else Q

    def _check(self, other: "TruncatedMap") -> None:
        if (self.dim_in, self.dim_out) != (other.dim_in, other.dim_out):
            raise AmbientMismatch(
                "maps between different spaces",
                left=[self.dim_in, self.dim_out],
                right=[other.dim_in, other.dim_out],
            )

    def __add__(self, other: "TruncatedMap") -> "TruncatedMap":
        self._check(other)
        field = self._merge_field(other)
        terms = {m: as_vector(v, field) for m, v in self.terms.items()}
        for m, v in other.terms.items():
            v = as_vector(v, field)
            terms[m] = terms[m] + v if m in terms else v
        return self._build(self, min(self.order, other.order), terms, field)

    def __neg__(self) -> "TruncatedMap":
        return self._build(self, self.order, {m: -v for m, v in self.terms.items()}, self.field)

    def __sub__(self, other: "TruncatedMap") -> "TruncatedMap":
        return self + (-other)

    def scale(self, c) -> "TruncatedMap":
        field = QI if self.field.is_complex or (isinstance(c, Gaussian) and c.im) else Q
        return self._build(self, self.order, {m: as_vector([c * x for x in v], field) for m, v in self.terms.items()}, field)

    def times_series(self, f: TruncatedSeries) -> "TruncatedMap":
        """``f · M`` truncated at the smaller order."""
        order = min(self.order, f.order)
        field = QI if self.field.is_complex or f.field.is_complex else Q
        terms: Dict[Monomial, np.ndarray] = {}
        for m1, c in f.terms.items():
            for m2, v in self.terms.items():
                if len(m1) + len(m2) <= order:
                    m = times(m1, m2)
                    value = as_vector([c * x for x in v], field)
                    terms[m] = terms[m] + value if m in terms else value
        return self._build(self, order, terms, field)

    def map_values(self, fn, dim_out: int, field: Optional[Field] = None) -> "TruncatedMap":
        """Apply a linear map to every coefficient."""
        field = field or self.field
        return TruncatedMap(self.dim_in, dim_out, self.order, {m: fn(v) for m, v in self.terms.items()}, field)

    def directional(self, a: "TruncatedMap") -> "TruncatedMap":
        """``(a·∇)M``: derivative of this map along the vector field ``a``; one order is consumed."""
        if a.dim_out != self.dim_in:
            raise AmbientMismatch("vector field and map live on different spaces", expected=self.dim_in)
        order = min(a.order, self.order) - 1
        if order < 0:
            raise OrderExhausted("order exhausted by differentiation", order=order)
        field = self._merge_field(a)
        terms: Dict[Monomial, np.ndarray] = {}
        for m, v in self.terms.items():
            if len(m) - 1 > order:
                continue
            for j in set(m):
                count, rest = derivative(m, j)
                for ma, va in a.terms.items():
                    c = va[j]
                    if not c or len(ma) + len(rest) > order:
                        continue
                    key = times(ma, rest)
                    value = as_vector([count * c * x for x in v], field)
                    terms[key] = terms[key] + value if key in terms else value
        return TruncatedMap(self.dim_in, self.dim_out, order, terms, field)

    def evaluate(self, v: Sequence) -> np.ndarray:
        out = zeros(self.dim_out, self.field)
        for m, coeff in self.terms.items():
            c = self.field.one
            for j in m:
                c = c * v[j]
            if c:
                out = out + c * coeff
        return out

    def reflect(self) -> "TruncatedMap":
        """``v ↦ M(-v)``: degree ``h`` picks up the sign ``(-1)^h``."""
        return self._build(self, self.order, {m: (-v if len(m) % 2 else v) for m, v in self.terms.items()}, self.field)

    def is_zero(self) -> bool:
        return not self.terms

    def is_symmetric(self) -> bool:
        """Every stored component equals its symmetrization (always true for the polynomial storage)."""
        return all(list(m) == sorted(m) for m in self.terms)

    def __eq__(self, other):
        if not isinstance(other, TruncatedMap):
            return NotImplemented
        return self.order == other.order and (self - other).is_zero()

    def to_json(self) -> dict:
        """Symmetric-tensor table: degree → index tuple → coefficient vector."""
        table: Dict[str, Dict[str, list]] = {}
        for m in sorted(self.terms, key=lambda k: (len(k), k)):
            table.setdefault(str(len(m)), {})[",".join(map(str, m))] = jsonable(self.tensor(m))
        return {"order": self.order, "dim_in": self.dim_in, "dim_out": self.dim_out, "components": table}

    def __repr__(self):
        return f"{type(self).__name__}({self.dim_in}->{self.dim_out}, order={self.order}, terms={len(self.terms)})"


class TruncatedVectorField(TruncatedMap):
    """Formal vector field ``Σ X_h`` on ``V``: a truncated map ``V → V``."""

    def __init__(self, dim: int, order: int, terms=None, field: Field = Q, dim_out: Optional[int] = None):
        super().__init__(dim, dim if dim_out is None else dim_out, order, terms, field)

    @classmethod
    def _build(cls, like, order, terms, field):
        return cls(like.dim_in, order, terms, field)

    @classmethod
    def from_map(cls, m: TruncatedMap) -> "TruncatedVectorField":
        if m.dim_in != m.dim_out:
            raise AmbientMismatch("a vector field maps V to V", left=m.dim_in, right=m.dim_out)
        return cls(m.dim_in, m.order, m.terms, m.field)

    @classmethod
    def linear(cls, matrix, order: int = 1, field: Field = Q) -> "TruncatedVectorField":
        """``v ↦ P v``."""
        n = len(matrix)
        terms = {(j,): [matrix[i][j] for i in range(n)] for j in range(n)}
        return cls(n, order, terms, field)

    def times_series(self, f: TruncatedSeries) -> "TruncatedVectorField":
        return TruncatedVectorField.from_map(super().times_series(f))

    def apply(self, f: TruncatedSeries) -> TruncatedSeries:
        """The derivation on series: ``Σ_j X^j ∂_j f``."""
        order = min(self.order, f.order) - 1
        if order < 0:
            raise OrderExhausted("order exhausted by differentiation", order=order)
        terms: Dict[Monomial, object] = {}
        for m, c in f.terms.items():
            for j in set(m):
                count, rest = derivative(m, j)
                for ma, va in self.terms.items():
                    if va[j] and len(ma) + len(rest) <= order:
                        key = times(ma, rest)
                        terms[key] = terms.get(key, 0) + count * c * va[j]
        return TruncatedSeries(self.dim_in, order, terms, QI if self.field.is_complex or f.field.is_complex else Q)


def vf_bracket(a: TruncatedMap, b: TruncatedMap) -> TruncatedVectorField:
    """``[A, B] = (A·∇)B - (B·∇)A``, valid to one order less than the inputs.

    With this sign right-translation fields satisfy ``[R_X, R_Y] = -R_{[X,Y]}``
    and linear fields ``Pv``, ``Qv`` bracket to ``(QP - PQ)v``.
    """
    if min(a.order, b.order) < 1:
        raise OrderExhausted("bracket of order-0 fields is undefined", order=min(a.order, b.order))
    return TruncatedVectorField.from_map(b.directional(a) - a.directional(b))
