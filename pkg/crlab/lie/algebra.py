"""Lie algebras given by sparse structure constants."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from crlab.core.matrix import Echelon, as_vector, unit, zeros
from crlab.core.scalars import Field, Scalar
from crlab.core.subspace import Subspace
from crlab.errors import AmbientMismatch, JacobiViolation

logger = logging.getLogger(__name__)

Terms = Tuple[Tuple[int, Scalar], ...]


class LieAlgebra:
    """Finite-dimensional Lie algebra ``[e_i, e_j] = Σ_k c_ijk e_k``.

    Only pairs ``i < j`` are stored; ``[e_j, e_i]`` is the negated entry.
    ----------------------------------------------------------------
    Parameters
    ----------
    name : str
        Display name, also written to manifests.
    field : Field
        Coefficient field of the structure constants.
    basis : sequence of str
        Basis labels; their count is the dimension.
    brackets : mapping
        ``{(i, j): {k: c}}`` with ``i < j``; zero brackets may be omitted.
    """

    def __init__(self, name: str, field: Field, basis: Sequence[str], brackets: Mapping[Tuple[int, int], Mapping[int, Scalar]]):
        self.name = name
        self.field = field
        self.basis = tuple(basis)
        n = len(self.basis)
        table: Dict[Tuple[int, int], Terms] = {}
        for (i, j), terms in sorted(brackets.items()):
            if not (0 <= i < j < n):
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {n}")
            clean = tuple((k, field.coerce(c)) for k, c in sorted(terms.items()) if field.coerce(c))
            if any(not 0 <= k < n for k, _ in clean):
                raise ValueError(f"bracket ({i}, {j}) refers to a basis index outside 0..{n - 1}")
            if clean:
                table[(i, j)] = clean
        self.structure: Dict[Tuple[int, int], Terms] = table
        self._rows: Dict[int, Dict[int, Terms]] = {}
        for (i, j), terms in table.items():
            self._rows.setdefault(i, {})[j] = terms
            self._rows.setdefault(j, {})[i] = tuple((k, -c) for k, c in terms)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self, values: Sequence) -> np.ndarray:
        return as_vector(values, self.field)

    def basis_vector(self, index_or_label) -> np.ndarray:
        index = self.basis.index(index_or_label) if isinstance(index_or_label, str) else index_or_label
        return unit(self.dim, index, self.field)

    def zero_vector(self) -> np.ndarray:
        return zeros(self.dim, self.field)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.field)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim, self.field)

    def span(self, vectors) -> Subspace:
        return Subspace.span(vectors, self.dim, self.field)

    def span_of(self, *labels: str) -> Subspace:
        return self.span(self.basis_vector(label) for label in labels)

    def bracket(self, x: Sequence, y: Sequence) -> np.ndarray:
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatch(
                f"bracket of vectors of lengths {len(x)}, {len(y)} in an algebra of dimension {self.dim}",
                expected=self.dim,
            )
        out = [self.field.zero] * self.dim
        ny = [(j, yj) for j, yj in enumerate(y) if yj]
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._rows.get(i)
            if not row:
                continue
            for j, yj in ny:
                terms = row.get(j)
                if terms:
                    f = xi * yj
                    for k, c in terms:
                        out[k] = out[k] + f * c
        return as_vector(out, self.field)

    def jacobi_violation(self) -> Optional[Tuple[Tuple[int, int, int], np.ndarray]]:
        """First basis triple ``i < j < k`` with a nonzero Jacobi residual, if any."""
        e = [self.basis_vector(i) for i in range(self.dim)]
        for i, j, k in combinations(range(self.dim), 3):
            residual = (
                self.bracket(self.bracket(e[i], e[j]), e[k])
                + self.bracket(self.bracket(e[j], e[k]), e[i])
                + self.bracket(self.bracket(e[k], e[i]), e[j])
            )
            if any(residual):
                return (i, j, k), residual
        return None

    def with_field(self, field: Field, name: Optional[str] = None) -> "LieAlgebra":
        brackets = {key: dict(terms) for key, terms in self.structure.items()}
        return LieAlgebra(name or self.name, field, self.basis, brackets)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, field={self.field})"


def bracket(a: LieAlgebra, x: Sequence, y: Sequence) -> np.ndarray:
    return a.bracket(x, y)


def validate(a: LieAlgebra) -> Dict[str, object]:
    """Check the Jacobi identity on all basis triples.

    Raises
    ------
    JacobiViolation
        With the first violating triple (0-based indices) and its residual.
    """
    violation = a.jacobi_violation()
    if violation is not None:
        (i, j, k), residual = violation
        labels = a.basis
        raise JacobiViolation(
            f"Jacobi identity fails on ({labels[i]}, {labels[j]}, {labels[k]})",
            triple=[i, j, k],
            labels=[labels[i], labels[j], labels[k]],
            residual=residual,
        )
    logger.info("validated %s: dim %d over %s", a.name, a.dim, a.field)
    return {"name": a.name, "valid": True, "dim": a.dim, "field": a.field.name, "basis": list(a.basis)}


def _bracket_rows(a: LieAlgebra, s: Sequence[np.ndarray], t: Sequence[np.ndarray], target: Subspace, ech: Echelon) -> None:
    for y in t:
        residues = [target.reduce(a.bracket(x, y)) for x in s]
        for k in range(a.dim):
            row = {c: r[k] for c, r in enumerate(residues) if r[k]}
            if row:
                ech.add(row)
        if ech.rank == len(s):
            return


def bracket_kernel(a: LieAlgebra, source: Subspace, probe: Subspace, target: Subspace) -> Subspace:
    """``{x ∈ source | [x, probe] ⊆ target}`` as one stacked linear system over a basis of ``source``."""
    s = source.vectors()
    if not s:
        return source
    ech = Echelon(len(s), a.field)
    _bracket_rows(a, s, probe.vectors(), target, ech)
    vectors = []
    for c in ech.kernel():
        v = a.zero_vector()
        for idx, coef in enumerate(c):
            if coef:
                v = v + coef * s[idx]
        vectors.append(v)
    return a.span(vectors)


def brackets_of(a: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """Span of ``[s, t]``."""
    return a.span(a.bracket(x, y) for x in s.vectors() for y in t.vectors())


def generated_subalgebra(a: LieAlgebra, s: Subspace) -> Subspace:
    current = s
    while True:
        grown = current + brackets_of(a, current, current)
        if grown == current:
            return current
        current = grown


def largest_ideal_in(a: LieAlgebra, s: Subspace) -> Subspace:
    """Largest ideal of ``a`` inside ``s`` by the fixpoint ``a_{k+1} = {x ∈ a_k | [g, x] ⊆ a_k}``."""
    current = s
    full = a.full()
    while True:
        smaller = bracket_kernel(a, current, full, current)
        if smaller == current:
            return current
        current = smaller


def is_subalgebra(a: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors()
    return all(s.contains(a.bracket(x, y)) for n, x in enumerate(vs) for y in vs[n + 1:])


def is_ideal(a: LieAlgebra, s: Subspace) -> bool:
    vs = s.vectors()
    return all(s.contains(a.bracket(a.basis_vector(i), y)) for i in range(a.dim) for y in vs)


def normalizes(a: LieAlgebra, h: Subspace, s: Subspace) -> bool:
    """True when ``[h, s] ⊆ s``."""
    return all(s.contains(a.bracket(x, y)) for x in h.vectors() for y in s.vectors())
