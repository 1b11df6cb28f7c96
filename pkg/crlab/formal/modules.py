"""Invariant modules of star fields and truncated symmetry algebras."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from crlab.core.matrix import Echelon, LinearCoordinates, as_vector
from crlab.core.scalars import I, QI, Q, Field, imag_part, real_part
from crlab.core.subspace import Subspace
from crlab.errors import AmbientMismatch, ModuleConditionsViolated, jsonable
from crlab.formal.series import (
    Monomial,
    TruncatedMap,
    TruncatedSeries,
    TruncatedVectorField,
    derivative,
    monomials_up_to,
    times,
    vf_bracket,
)
from crlab.formal.star import StarRealization
from crlab.lie.algebra import normalizes

logger = logging.getLogger(__name__)


@dataclass
class ModuleGenerators:
    """``L*_w`` for a basis ``w`` of ``π(dist) = V ∩ dist`` and the subspace recovered from their values at 0."""

    dist: Subspace
    order: int
    directions: List[np.ndarray]
    generators: List[TruncatedVectorField]
    recovered: Subspace

    @property
    def field(self) -> Field:
        return self.dist.field

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "field": self.dist.field.name,
            "directions": jsonable(self.directions),
            "generators": [g.to_json() for g in self.generators],
            "recovered": self.recovered.to_json(),
        }


def _ambient(r: StarRealization, dist: Subspace):
    a = r.algebra
    if dist.ambient_dim != a.dim:
        raise AmbientMismatch(
            f"distribution lives in dimension {dist.ambient_dim}, {a.name} has dimension {a.dim}",
            expected=a.dim,
            got=dist.ambient_dim,
        )
    if dist.field.is_complex:
        return a.with_field(QI, name=f"{a.name}_C"), Subspace.span(r.h0.vectors(), a.dim, QI)
    return a, r.h0


def check_module_conditions(r: StarRealization, dist: Subspace) -> None:
    """``h0 ⊆ dist`` and ``[h0, dist] ⊆ dist`` (after complexification for a complex ``dist``).

    Raises
    ------
    ModuleConditionsViolated
    """
    algebra, h0 = _ambient(r, dist)
    if not h0 <= dist:
        raise ModuleConditionsViolated("h0 is not contained in the distribution", h0=h0, dist=dist)
    if not normalizes(algebra, h0, dist):
        raise ModuleConditionsViolated("the distribution is not h0-stable", h0=h0, dist=dist)


def module_generated(r: StarRealization, dist: Subspace, order: Optional[int] = None) -> ModuleGenerators:
    """Generators of the module of a real ``l0`` or a complex ``q`` and the recovery check."""
    check_module_conditions(r, dist)
    order = r.order if order is None else order
    a = r.algebra
    directions = Subspace.span((r.project(w) for w in dist.vectors()), r.dim, dist.field).vectors()
    basis_fields = [r.left(c, order) for c in r.basis]
    generators = [
        TruncatedVectorField.from_map(TruncatedMap.linear_combination(list(w), basis_fields, dist.field))
        for w in directions
    ]
    _, h0 = _ambient(r, dist)
    values = []
    for g in generators:
        at_zero = g.value_at_zero()
        v = as_vector([dist.field.zero] * a.dim, dist.field)
        for c, basis_vector in zip(at_zero, r.basis):
            if c:
                v = v + c * as_vector(basis_vector, dist.field)
        values.append(v)
    recovered = h0 + Subspace.span(values, a.dim, dist.field)
    assert recovered == dist, "values at 0 of the module generators do not recover the distribution"
    logger.info("module of %s: %d generators to order %d over %s", a.name, len(generators), order, dist.field)
    return ModuleGenerators(dist, order, directions, generators, recovered)


def _flat_keys(dim: int, order: int) -> Dict[Tuple[Monomial, int], int]:
    return {(m, k): n for n, (m, k) in enumerate((m, k) for m in monomials_up_to(dim, order) for k in range(dim))}


def module_coefficients(
    theta: TruncatedMap,
    generators: Sequence[TruncatedMap],
    order: Optional[int] = None,
) -> Optional[List[TruncatedSeries]]:
    """Series ``f_j`` with ``θ ≡ Σ f_j G_j`` to the given order, or None when ``θ`` is outside the module."""
    order = theta.order if order is None else order
    dim = theta.dim_in
    field = QI if theta.field.is_complex or any(g.field.is_complex for g in generators) else Q
    keys = _flat_keys(dim, order)
    unknowns = [(j, m) for j in range(len(generators)) for m in monomials_up_to(dim, order)]
    columns = []
    for j, m in unknowns:
        col = as_vector([field.zero] * len(keys), field)
        for m2, v in generators[j].terms.items():
            if len(m) + len(m2) <= order:
                base = times(m, m2)
                for k, c in enumerate(v):
                    if c:
                        col[keys[(base, k)]] += c
        columns.append(col)
    target = as_vector([field.zero] * len(keys), field)
    for m, v in theta.terms.items():
        if len(m) <= order:
            for k, c in enumerate(v):
                target[keys[(m, k)]] = c
    if not columns:
        return None if any(target) else []
    coeffs = LinearCoordinates(columns, len(keys), field).solve(target)
    if coeffs is None:
        return None
    series = []
    for j in range(len(generators)):
        terms = {m: c for (jj, m), c in zip(unknowns, coeffs) if jj == j and c}
        series.append(TruncatedSeries(dim, order, terms, field))
    return series


def in_module(theta: TruncatedMap, generators: Sequence[TruncatedMap], order: Optional[int] = None) -> bool:
    return module_coefficients(theta, generators, order) is not None


def orbit_closure(r: StarRealization, y: Sequence) -> Subspace:
    """Smallest ``h0``-stable subspace containing ``y``."""
    a = r.algebra
    current = a.span([y])
    while True:
        grown = current + a.span(a.bracket(h, z) for h in r.h0.vectors() for z in current.vectors())
        if grown == current:
            return current
        current = grown


def mixed_bracket_in_module(r: StarRealization, x: Sequence, y: Sequence, order: Optional[int] = None) -> bool:
    """``[R*_X, L*_Y]`` lies, to order ``N-1``, in the module of ``L*_Z`` for ``Z`` in the ``h0``-orbit of ``Y``."""
    order = r.order if order is None else order
    theta = vf_bracket(r.right(x, order), r.left(y, order))
    generators = [g for g in (r.left(z, order - 1) for z in orbit_closure(r, y).vectors()) if not g.is_zero()]
    return in_module(theta, generators, order - 1)


@dataclass
class SymmetryOrder:
    order: int
    unknowns: int
    equations: int
    raw_dim: int
    jet_degree: int
    jet_dim: int

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "raw_dim": self.raw_dim,
            "jet_degree": self.jet_degree,
            "jet_dim": self.jet_dim,
        }


@dataclass
class SymmetryTable:
    """Dimensions of truncated symmetries by order.

    ``stabilized`` is set once ``stable_run`` consecutive orders give the same
    jet dimension; ``dimension`` is that common value.
    """

    rows: List[SymmetryOrder] = field(default_factory=list)
    stable_run: int = 3
    stabilized: bool = False
    dimension: Optional[int] = None

    @property
    def jet_dims(self) -> List[int]:
        return [row.jet_dim for row in self.rows]

    @property
    def raw_dims(self) -> List[int]:
        return [row.raw_dim for row in self.rows]

    def to_json(self) -> dict:
        return {
            "rows": [row.to_json() for row in self.rows],
            "stable_run": self.stable_run,
            "stabilized": self.stabilized,
            "dimension": self.dimension,
        }


class _SymmetrySystem:
    """``[Θ, L_ℓ] - Σ_j f_{jℓ} L_j ≡ 0`` in degrees ``< n`` for a real field ``Θ`` of order ``n``."""

    def __init__(self, dim: int, n: int, generators: Sequence[TruncatedMap], complex_: bool):
        self.dim = dim
        self.n = n
        self.generators = [g.truncate(n) for g in generators]
        self.parts = (0, 1) if complex_ else (0,)
        self.theta = [(m, k) for m in monomials_up_to(dim, n) for k in range(dim)]
        r = len(generators)
        low = monomials_up_to(dim, n - 1)
        self.coefficients = [(l, j, m, p) for l in range(r) for j in range(r) for m in low for p in self.parts]
        self.rows: Dict[Tuple, Dict[int, object]] = {}

    @property
    def unknowns(self) -> int:
        return len(self.theta) + len(self.coefficients)

    def _add(self, key: Tuple, value, col: int) -> None:
        for p, part in ((0, real_part(value)), (1, imag_part(value))):
            if part and p in self.parts:
                row = self.rows.setdefault(key + (p,), {})
                row[col] = row.get(col, 0) + part

    def build(self) -> "_SymmetrySystem":
        top = self.n - 1
        for col, (m, k) in enumerate(self.theta):
            for l, gen in enumerate(self.generators):
                # (Θ·∇)L
                for m2, v in gen.terms.items():
                    count, rest = derivative(m2, k)
                    if count and len(m) + len(rest) <= top:
                        out = times(m, rest)
                        for c, x in enumerate(v):
                            if x:
                                self._add((l, out, c), count * x, col)
                # -(L·∇)Θ
                for j in set(m):
                    count, rest = derivative(m, j)
                    for m2, v in gen.terms.items():
                        if v[j] and len(m2) + len(rest) <= top:
                            self._add((l, times(m2, rest), k), -count * v[j], col)
        offset = len(self.theta)
        for n, (l, j, m, p) in enumerate(self.coefficients):
            unit = I if p else 1
            for m2, v in self.generators[j].terms.items():
                if len(m) + len(m2) <= top:
                    out = times(m, m2)
                    for c, x in enumerate(v):
                        if x:
                            self._add((l, out, c), -unit * x, offset + n)
        return self

    def solve(self, jet_degree: int) -> Tuple[int, int]:
        """``(raw_dim, jet_dim)``: ranks of the solution space projected to ``Θ`` and to its low-degree part."""
        ech = Echelon(self.unknowns, Q)
        for key in sorted(self.rows, key=repr):
            ech.add(self.rows[key])
        kernel = ech.kernel()
        raw = Echelon(len(self.theta), Q)
        jet = Echelon(len(self.theta), Q)
        low = [i for i, (m, _) in enumerate(self.theta) if len(m) <= jet_degree]
        for x in kernel:
            raw.add({i: x[i] for i in range(len(self.theta)) if x[i]})
            jet.add({i: x[i] for i in low if x[i]})
        return raw.rank, jet.rank


def truncated_symmetries(
    r: StarRealization,
    dist: Subspace,
    order: Optional[int] = None,
    stable_run: int = 3,
) -> SymmetryTable:
    """Truncated symmetries of the module of ``dist`` for orders ``1..N``, stopping once stabilized.

    The jet dimension at order ``n`` is the rank of the solutions restricted
    to degrees ``<= n // 2``; the top degrees of a truncated solution are only
    weakly constrained and are left out of the stabilization test.
    """
    order = r.order if order is None else order
    module = module_generated(r, dist, order)
    complex_ = dist.field.is_complex
    table = SymmetryTable(stable_run=stable_run)
    for n in range(1, order + 1):
        system = _SymmetrySystem(r.dim, n, module.generators, complex_).build()
        raw_dim, jet_dim = system.solve(n // 2)
        table.rows.append(SymmetryOrder(n, system.unknowns, len(system.rows), raw_dim, n // 2, jet_dim))
        logger.debug(
            "symmetries at order %d: %d unknowns, %d equations, raw %d, jet %d",
            n,
            system.unknowns,
            len(system.rows),
            raw_dim,
            jet_dim,
        )
        dims = table.jet_dims[-stable_run:]
        if len(dims) == stable_run and len(set(dims)) == 1:
            table.stabilized = True
            table.dimension = dims[0]
            break
    logger.info(
        "truncated symmetries of %s: jet dims %s, stabilized=%s", r.algebra.name, table.jet_dims, table.stabilized
    )
    return table
