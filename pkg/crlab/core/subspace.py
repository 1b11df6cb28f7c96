"""Subspaces of a coordinate space, stored by their canonical RREF basis."""
from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from crlab.core.matrix import Echelon, Matrix, as_vector, dense, sparse, unit, zeros
from crlab.core.scalars import Field, format_scalar, imag_part, real_part
from crlab.errors import AmbientMismatch


class Subspace:
    """A linear subspace of ``field^ambient_dim``.

    The basis is the reduced row echelon form of any spanning set, so two
    spanning sets of the same space give identical bases and equality is a
    plain comparison of entries.
    ----------------------------------------------------------------
    Attributes
    ----------
    ambient_dim : int
        Length of the coordinate vectors.
    field : Field
        ``Q`` for real subspaces, ``Q(i)`` for subspaces of a complexification.
    pivots : tuple of int
        Leading column of each basis row, increasing.
    """

    __slots__ = ("ambient_dim", "field", "_rows", "pivots", "_hash")

    def __init__(self, ambient_dim: int, field: Field, echelon: Echelon):
        self.ambient_dim = ambient_dim
        self.field = field
        self._rows: Tuple[np.ndarray, ...] = tuple(
            dense(r, ambient_dim, field) for r in echelon.rows()
        )
        self.pivots: Tuple[int, ...] = tuple(echelon.pivots)
        self._hash = None

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int, field: Field) -> "Subspace":
        ech = Echelon(ambient_dim, field)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(
                    f"vector of length {len(v)} in ambient space of dimension {ambient_dim}",
                    expected=ambient_dim,
                    got=len(v),
                )
            ech.add(sparse(as_vector(v, field)))
        return cls(ambient_dim, field, ech)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls(ambient_dim, field, Echelon(ambient_dim, field))

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls.span((unit(ambient_dim, i, field) for i in range(ambient_dim)), ambient_dim, field)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> Matrix:
        return Matrix(self._rows, self.field, cols=self.ambient_dim)

    def vectors(self) -> List[np.ndarray]:
        return [r.copy() for r in self._rows]

    def is_zero(self) -> bool:
        return not self._rows

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise AmbientMismatch(
                "subspaces live in different ambient spaces",
                left=f"{self.field}^{self.ambient_dim}",
                right=f"{other.field}^{other.ambient_dim}",
            )

    def _check_vector(self, v: Sequence) -> None:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(
                f"vector of length {len(v)} against ambient dimension {self.ambient_dim}",
                expected=self.ambient_dim,
                got=len(v),
            )

    def reduce(self, v: Sequence) -> np.ndarray:
        """Canonical remainder of ``v`` modulo this subspace (zero at every pivot)."""
        self._check_vector(v)
        out = as_vector(v, self.field)
        for p, row in zip(self.pivots, self._rows):
            c = out[p]
            if c:
                out = out - c * row
        return out

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> np.ndarray:
        """Coefficients of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return as_vector([v[p] for p in self.pivots], self.field)

    def complement_basis(self) -> List[np.ndarray]:
        """Unit vectors on the non-pivot columns; they span a complement."""
        taken = set(self.pivots)
        return [unit(self.ambient_dim, c, self.field) for c in range(self.ambient_dim) if c not in taken]

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.is_zero() or self.is_full():
            return self
        return Subspace.span(self._rows + other._rows, self.ambient_dim, self.field)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of ``(x, y) ↦ Σ x_a a_a − Σ y_b b_b``."""
        self._check(other)
        if self.is_zero() or other.is_full():
            return self
        if other.is_zero() or self.is_full():
            return other
        na = self.dim
        ech = Echelon(na + other.dim, self.field)
        for k in range(self.ambient_dim):
            row = {a: r[k] for a, r in enumerate(self._rows) if r[k]}
            row.update({na + b: -r[k] for b, r in enumerate(other._rows) if r[k]})
            if row:
                ech.add(row)
        vectors = []
        for x in ech.kernel():
            v = zeros(self.ambient_dim, self.field)
            for a in range(na):
                if x[a]:
                    v = v + x[a] * self._rows[a]
            vectors.append(v)
        return Subspace.span(vectors, self.ambient_dim, self.field)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return self.dim <= other.dim and all(other.contains(r) for r in self._rows)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.pivots == other.pivots
            and all(all(x == y for x, y in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.ambient_dim, self.field.name, self.pivots, tuple(x for r in self._rows for x in r))
            )
        return self._hash

    def map(self, fn, field: Field = None) -> "Subspace":
        """Span of the images of the basis under a linear map ``fn``."""
        field = field or self.field
        return Subspace.span((fn(r) for r in self._rows), self.ambient_dim, field)

    def conjugate(self) -> "Subspace":
        return self.map(lambda r: np.array([self.field.conjugate(x) for x in r], dtype=object))

    def real_and_imaginary_parts(self, field: Field) -> "Subspace":
        """Span over ``field`` (normally ℚ) of the real and imaginary parts of the basis."""
        parts = []
        for r in self._rows:
            parts.append([real_part(x) for x in r])
            parts.append([imag_part(x) for x in r])
        return Subspace.span(parts, self.ambient_dim, field)

    def to_json(self) -> List[List[str]]:
        return [[format_scalar(x) for x in r] for r in self._rows]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.field}^{self.ambient_dim}, basis={self.to_json()})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    return a <= b
