"""Exact matrices and the incremental echelon engine behind every solver.

Vectors and matrices are numpy object arrays holding exact scalars of one
:class:`~crlab.core.scalars.Field`. Elimination itself runs on sparse
``{column: value}`` rows, which keeps the large, mostly redundant constraint
systems of the prolongation and symmetry solvers cheap.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from crlab.core.scalars import Field, Scalar, format_scalar

logger = logging.getLogger(__name__)

SparseRow = Dict[int, Scalar]


def zeros(n: int, field: Field) -> np.ndarray:
    out = np.empty(n, dtype=object)
    out[:] = [field.zero] * n
    return out


def unit(n: int, index: int, field: Field) -> np.ndarray:
    out = zeros(n, field)
    out[index] = field.one
    return out


def as_vector(values: Iterable, field: Field) -> np.ndarray:
    items = [field.coerce(v) for v in values]
    out = np.empty(len(items), dtype=object)
    out[:] = items
    return out


def is_zero_vector(v: np.ndarray) -> bool:
    return not any(v)


def sparse(v: Sequence) -> SparseRow:
    return {k: x for k, x in enumerate(v) if x}


def dense(row: SparseRow, n: int, field: Field) -> np.ndarray:
    out = zeros(n, field)
    for k, x in row.items():
        out[k] = x
    return out


class Echelon:
    """Reduced row echelon form maintained row by row.

    Rows are added one at a time; each is reduced against the current pivots
    and, if independent, becomes a new pivot row. The stored rows are kept
    fully reduced, so at any moment they are the unique RREF of everything
    added so far (pivot = leftmost nonzero column).
    """

    def __init__(self, ncols: int, field: Field):
        self.ncols = ncols
        self.field = field
        self._rows: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Remainder of ``row`` after clearing every pivot column."""
        row = dict(row)
        for c in [c for c in row if c in self._rows]:
            f = row.get(c)
            if not f:
                continue
            for k, v in self._rows[c].items():
                nv = row.get(k, self.field.zero) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: SparseRow) -> bool:
        """Add a row; return True when it was independent of the previous ones."""
        row = self.reduce({k: v for k, v in row.items() if v})
        if not row:
            return False
        p = min(row)
        inv = self.field.one / row[p]
        row = {k: v * inv for k, v in row.items()}
        for other in self._rows.values():
            f = other.get(p)
            if f:
                for k, v in row.items():
                    nv = other.get(k, self.field.zero) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self._rows[p] = row
        return True

    def extend(self, rows: Iterable[SparseRow]) -> "Echelon":
        for row in rows:
            self.add(row)
        return self

    def rows(self) -> List[SparseRow]:
        return [self._rows[p] for p in self.pivots]

    def row(self, pivot: int) -> SparseRow:
        return self._rows[pivot]

    def kernel(self) -> List[np.ndarray]:
        """Basis of ``{x | row·x = 0 for every added row}``, one vector per free column."""
        out = []
        for f in range(self.ncols):
            if f in self._rows:
                continue
            x = unit(self.ncols, f, self.field)
            for p, r in self._rows.items():
                v = r.get(f)
                if v:
                    x[p] = -v
            out.append(x)
        return out


class Matrix:
    """Dense exact matrix (rows × cols) over a coefficient field."""

    def __init__(self, entries, field: Field, cols: Optional[int] = None):
        rows = [as_vector(r, field) for r in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix rows")
        self.field = field
        self.entries = np.empty((len(rows), cols), dtype=object)
        for i, r in enumerate(rows):
            self.entries[i, :] = r

    @classmethod
    def from_array(cls, array: np.ndarray, field: Field) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m.entries = array
        return m

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        return cls([unit(n, i, field) for i in range(n)], field, cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls([zeros(cols, field) for _ in range(rows)], field, cols=cols)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def row(self, i: int) -> np.ndarray:
        return self.entries[i, :].copy()

    def transpose(self) -> "Matrix":
        return Matrix.from_array(self.entries.T.copy(), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = Matrix.zeros(self.rows, other.cols, self.field)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i, k]
                if a:
                    out.entries[i, :] = out.entries[i, :] + a * other.entries[k, :]
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and all(a == b for a, b in zip(self.entries.flat, other.entries.flat))
        )

    def __hash__(self):
        return hash((self.field.name, self.shape, tuple(self.entries.flat)))

    def to_lists(self) -> List[List[str]]:
        return [[format_scalar(x) for x in r] for r in self.entries]

    def __repr__(self):
        return f"Matrix({self.to_lists()!r}, field={self.field.name})"


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form; zero rows are kept at the bottom."""
    ech = Echelon(m.cols, m.field).extend(sparse(r) for r in m.entries)
    rows = [dense(r, m.cols, m.field) for r in ech.rows()]
    rows += [zeros(m.cols, m.field) for _ in range(m.rows - len(rows))]
    return Matrix(rows, m.field, cols=m.cols)


def nullspace(m: Matrix) -> List[np.ndarray]:
    return Echelon(m.cols, m.field).extend(sparse(r) for r in m.entries).kernel()


class LinearCoordinates:
    """Coefficients of vectors with respect to a fixed spanning family.

    The family may be linearly dependent; :meth:`solve` then returns one
    particular solution. The elimination runs on ``[v_a | e_a]`` so that each
    reduced row remembers which combination of the family it came from.
    """

    def __init__(self, vectors: Sequence[np.ndarray], length: int, field: Field):
        self.length = length
        self.count = len(vectors)
        self.field = field
        self._echelon = Echelon(length + self.count, field)
        for a, v in enumerate(vectors):
            row = sparse(v)
            row[length + a] = field.one
            self._echelon.add(row)
        self._span_pivots = [p for p in self._echelon.pivots if p < length]

    @property
    def rank(self) -> int:
        return len(self._span_pivots)

    def solve(self, target: Sequence) -> Optional[np.ndarray]:
        """Coefficients ``c`` with ``Σ c_a v_a = target``, or None outside the span."""
        remainder = sparse(target)
        coefficients: SparseRow = {}
        for p in self._span_pivots:
            w = remainder.get(p)
            if not w:
                continue
            for k, v in self._echelon.row(p).items():
                if k < self.length:
                    nv = remainder.get(k, self.field.zero) - w * v
                    if nv:
                        remainder[k] = nv
                    else:
                        remainder.pop(k, None)
                else:
                    key = k - self.length
                    coefficients[key] = coefficients.get(key, self.field.zero) + w * v
        if remainder:
            return None
        return dense(coefficients, self.count, self.field)
