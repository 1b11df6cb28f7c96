"""Invariant fields, star fields with isotropy corrections and the realization kernel.

For a pair ``(g0, h0)`` and a complement ``V`` with projection ``π`` along
``h0``, the star field ``R*_X`` of ``X ∈ g0`` is the formal vector field on
``V`` generating the left action of ``exp(tX)`` in the coordinates
``v ↦ exp(v)·H``. Its homogeneous parts satisfy

    x_0 = π(X),   h′_0 = X - π(X),
    x_{h+1} + h′_{h+1} = (-1)^{h+1} b_{h+1} ad(v)^{h+1} X
                         - Σ_{r=0}^{h} b_{r+1} ad(v)^{r+1} h′_{h-r}(v)

with ``x_{h+1} ∈ V`` and ``h′_{h+1} ∈ h0``. ``L*_Y`` and ``H`` follow the same
recursion with the sign ``(-1)^{h+1}`` replaced by ``+1``.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from crlab.core.matrix import Echelon, LinearCoordinates, as_vector, zeros
from crlab.core.scalars import QI, Q, Gaussian, imag_part, real_part
from crlab.core.subspace import Subspace
from crlab.errors import AmbientMismatch, ComplementInvalid, NotSubalgebra, jsonable
from crlab.formal.series import Monomial, TruncatedMap, TruncatedVectorField, bch_coefficients, times, vf_bracket
from crlab.lie.algebra import LieAlgebra, is_subalgebra, largest_ideal_in

logger = logging.getLogger(__name__)

Polynomial = Dict[Monomial, np.ndarray]

RIGHT, LEFT = "right", "left"


def _axpy(acc: Polynomial, c, poly: Polynomial) -> None:
    for m, v in poly.items():
        w = c * v
        acc[m] = acc[m] + w if m in acc else w


class _Expansion:
    """Homogeneous parts of one star field and its ``h0``-valued correction, grown degree by degree."""

    def __init__(self, realization: "StarRealization", x: np.ndarray, sign: int):
        self.r = realization
        self.sign = sign
        coords = realization.project(x)
        self.ad_x: List[Polynomial] = [{(): x}]
        self.fields: List[Polynomial] = [{(): coords}]
        self.corrections: List[Polynomial] = [{(): x - realization.include(coords)}]
        # powers[s][k] = ad(v)^k applied to corrections[s]
        self.powers: List[List[Polynomial]] = [[self.corrections[0]]]

    @property
    def degree(self) -> int:
        return len(self.fields) - 1

    def grow(self) -> None:
        r = self.r
        h = self.degree
        b = bch_coefficients(h + 1)
        self.ad_x.append(r.ad(self.ad_x[-1]))
        rhs: Polynomial = {}
        _axpy(rhs, (self.sign ** (h + 1)) * b[h + 1], self.ad_x[h + 1])
        for s in range(h + 1):
            chain = self.powers[s]
            while len(chain) < h - s + 2:
                chain.append(r.ad(chain[-1]))
            _axpy(rhs, -b[h - s + 1], chain[h - s + 1])
        field_part: Polynomial = {}
        correction: Polynomial = {}
        for m, v in rhs.items():
            if not any(v):
                continue
            coords = r.project(v)
            rest = v - r.include(coords)
            if any(coords):
                field_part[m] = coords
            if any(rest):
                correction[m] = rest
        self.fields.append(field_part)
        self.corrections.append(correction)
        self.powers.append([correction])

    def ensure(self, degree: int) -> None:
        while self.degree < degree:
            self.grow()


class StarRealization:
    """Star fields of a pair ``(g0, h0)`` on a complement ``V``.

    Parameters
    ----------
    algebra : LieAlgebra
        ``g0``, over ℚ.
    h0 : Subspace
        The isotropy subalgebra.
    complement : Subspace or sequence of vectors, optional
        Basis of ``V``; defaults to the unit vectors off the pivots of ``h0``.
    order : int, optional
        Default truncation order; ``dim g0`` when omitted.

    Raises
    ------
    NotSubalgebra
        When ``h0`` is not closed under the bracket.
    ComplementInvalid
        When ``V ⊕ h0 ≠ g0``.
    """

    def __init__(
        self,
        algebra: LieAlgebra,
        h0: Subspace,
        complement: Union[Subspace, Sequence[Sequence], None] = None,
        order: Optional[int] = None,
    ):
        if algebra.field.is_complex:
            raise AmbientMismatch(f"{algebra.name} must be defined over Q", field=algebra.field.name)
        if h0.ambient_dim != algebra.dim:
            raise AmbientMismatch(
                f"h0 lives in dimension {h0.ambient_dim}, {algebra.name} has dimension {algebra.dim}",
                expected=algebra.dim,
                got=h0.ambient_dim,
            )
        if not is_subalgebra(algebra, h0):
            raise NotSubalgebra("h0 is not a subalgebra", h0=h0)
        self.algebra = algebra
        self.h0 = h0
        self.order = algebra.dim if order is None else order
        if complement is None:
            self.basis = h0.complement_basis()
            self._columns: Optional[List[int]] = [int(np.flatnonzero(v)[0]) for v in self.basis]
            self._solver = None
        else:
            vectors = complement.vectors() if isinstance(complement, Subspace) else [as_vector(v, Q) for v in complement]
            if len(vectors) + h0.dim != algebra.dim:
                raise ComplementInvalid(
                    f"complement of dimension {len(vectors)} next to h0 of dimension {h0.dim} in dimension {algebra.dim}",
                    complement=len(vectors),
                    h0=h0.dim,
                )
            solver = LinearCoordinates(vectors + h0.vectors(), algebra.dim, Q)
            if solver.rank != algebra.dim:
                raise ComplementInvalid("complement meets h0", complement=vectors)
            self.basis = vectors
            self._columns = None
            self._solver = solver
        self._expansions: Dict[Tuple[str, int], _Expansion] = {}
        logger.debug("star realization of %s: dim V %d, dim h0 %d", algebra.name, self.dim, h0.dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _project_real(self, x: np.ndarray) -> np.ndarray:
        if self._columns is not None:
            r = self.h0.reduce(x)
            return as_vector([r[c] for c in self._columns], Q)
        coeffs = self._solver.solve(x)
        return as_vector(coeffs[: self.dim], Q)

    def project(self, x: Sequence) -> np.ndarray:
        """``π(x)`` in the coordinates of ``V``; complex vectors are projected part by part."""
        if any(isinstance(c, Gaussian) and c.im for c in x):
            re = self._project_real(as_vector([real_part(c) for c in x], Q))
            im = self._project_real(as_vector([imag_part(c) for c in x], Q))
            return as_vector([Gaussian(a, b) for a, b in zip(re, im)], QI)
        return self._project_real(as_vector([real_part(c) for c in x], Q))

    def include(self, coords: Sequence) -> np.ndarray:
        out = zeros(self.algebra.dim, Q)
        for c, v in zip(coords, self.basis):
            if c:
                out = out + c * v
        return out

    def ad(self, poly: Polynomial) -> Polynomial:
        """``v ↦ [v, P(v)]`` for a ``g0``-valued polynomial ``P``; degree goes up by one."""
        out: Polynomial = {}
        for m, w in poly.items():
            for i, c in enumerate(self.basis):
                z = self.algebra.bracket(c, w)
                if any(z):
                    key = times(m, (i,))
                    out[key] = out[key] + z if key in out else z
        return out

    def _expansion(self, side: str, a: int, degree: int) -> _Expansion:
        key = (side, a)
        exp = self._expansions.get(key)
        if exp is None:
            exp = _Expansion(self, self.algebra.basis_vector(a), -1 if side == RIGHT else 1)
            self._expansions[key] = exp
        exp.ensure(degree)
        return exp

    def _basis_field(self, side: str, a: int, order: int) -> TruncatedVectorField:
        exp = self._expansion(side, a, order)
        terms = {m: v for h in range(order + 1) for m, v in exp.fields[h].items()}
        return TruncatedVectorField(self.dim, order, terms, Q)

    def _basis_correction(self, side: str, a: int, order: int) -> TruncatedMap:
        exp = self._expansion(side, a, order)
        terms = {m: v for h in range(order + 1) for m, v in exp.corrections[h].items()}
        return TruncatedMap(self.dim, self.algebra.dim, order, terms, Q)

    def component(self, side: str, a: int, h: int) -> Polynomial:
        """Degree-``h`` part of the star field of the ``a``-th basis vector."""
        return self._expansion(side, a, h).fields[h]

    def _combine(self, side: str, x: Sequence, order: Optional[int], correction: bool):
        order = self.order if order is None else order
        if len(x) != self.algebra.dim:
            raise AmbientMismatch(f"vector of length {len(x)}, expected {self.algebra.dim}", expected=self.algebra.dim)
        build = self._basis_correction if correction else self._basis_field
        used = [(c, a) for a, c in enumerate(x) if c]
        if not used:
            if correction:
                return TruncatedMap.zero(self.dim, self.algebra.dim, order)
            return TruncatedVectorField(self.dim, order)
        combined = TruncatedMap.linear_combination([c for c, _ in used], [build(side, a, order) for _, a in used])
        if correction:
            return combined
        return TruncatedVectorField.from_map(combined)

    def right(self, x: Sequence, order: Optional[int] = None) -> TruncatedVectorField:
        """``R*_X``."""
        return self._combine(RIGHT, x, order, False)

    def right_correction(self, x: Sequence, order: Optional[int] = None) -> TruncatedMap:
        """``H′`` with values in ``h0``."""
        return self._combine(RIGHT, x, order, True)

    def left(self, x: Sequence, order: Optional[int] = None) -> TruncatedVectorField:
        """``L*_Y``; zero for ``Y ∈ h0``."""
        return self._combine(LEFT, x, order, False)

    def left_correction(self, x: Sequence, order: Optional[int] = None) -> TruncatedMap:
        return self._combine(LEFT, x, order, True)

    def to_json(self, labels: Optional[Sequence[str]] = None, order: Optional[int] = None) -> dict:
        """Symmetric-tensor tables of ``R*`` and ``L*`` for the named basis vectors (all by default)."""
        order = self.order if order is None else order
        names = list(labels) if labels else list(self.algebra.basis)
        fields = {}
        for name in names:
            x = self.algebra.basis_vector(name)
            fields[name] = {"right": self.right(x, order).to_json(), "left": self.left(x, order).to_json()}
        return {
            "algebra": self.algebra.name,
            "order": order,
            "h0": self.h0.to_json(),
            "complement": jsonable(self.basis),
            "fields": fields,
        }

    def __repr__(self):
        return f"StarRealization({self.algebra.name!r}, dim V={self.dim}, order={self.order})"


def invariant_fields(a: LieAlgebra, x: Sequence, order: int) -> Tuple[TruncatedVectorField, TruncatedVectorField]:
    """``(L_X, R_X)`` on ``V = g0`` in exponential coordinates."""
    realization = StarRealization(a, a.zero(), order=order)
    x = as_vector(x, Q)
    return realization.left(x), realization.right(x)


def star_fields(
    a: LieAlgebra,
    h0: Subspace,
    x: Sequence,
    order: int,
    complement=None,
) -> Tuple[Tuple[TruncatedVectorField, TruncatedMap], Tuple[TruncatedVectorField, TruncatedMap]]:
    """``((R*_X, H′), (L*_X, H))`` for one vector."""
    r = StarRealization(a, h0, complement, order)
    x = as_vector(x, Q)
    return (r.right(x), r.right_correction(x)), (r.left(x), r.left_correction(x))


def anti_homomorphism_defects(
    r: StarRealization,
    order: Optional[int] = None,
    pairs: Optional[Sequence[Tuple[int, int]]] = None,
) -> List[Tuple[int, int]]:
    """Basis pairs where ``[R*_X, R*_Y] + R*_{[X,Y]}`` is nonzero to order ``N-1``."""
    order = r.order if order is None else order
    a = r.algebra
    n = a.dim
    pairs = pairs if pairs is not None else [(i, j) for i in range(n) for j in range(i + 1, n)]
    fields = {i: r.right(a.basis_vector(i), order) for i in range(n)}
    bad = []
    for i, j in pairs:
        lhs = vf_bracket(fields[i], fields[j])
        rhs = r.right(a.bracket(a.basis_vector(i), a.basis_vector(j)), order - 1)
        if not (lhs + rhs).is_zero():
            bad.append((i, j))
    logger.info("anti-homomorphism check on %s at order %d: %d failing pairs", a.name, order, len(bad))
    return bad


def realization_kernel(r: StarRealization, order: Optional[int] = None) -> Subspace:
    """``{X | R*_X ≡ 0}`` to the given order, stopping early once it is zero."""
    order = r.order if order is None else order
    a = r.algebra
    ech = Echelon(a.dim, Q)
    for h in range(order + 1):
        rows: Dict[Tuple[Monomial, int], Dict[int, object]] = {}
        for i in range(a.dim):
            for m, coords in r.component(RIGHT, i, h).items():
                for k, c in enumerate(coords):
                    if c:
                        rows.setdefault((m, k), {})[i] = c
        for key in sorted(rows):
            ech.add(rows[key])
        logger.debug("realization kernel after degree %d: dim %d", h, a.dim - ech.rank)
        if ech.rank == a.dim:
            break
    kernel = a.span(ech.kernel())
    if order >= a.dim:
        assert kernel == largest_ideal_in(a, r.h0), "realization kernel differs from the largest ideal in h0"
    logger.info("realization kernel of %s: dim %d", a.name, kernel.dim)
    return kernel
