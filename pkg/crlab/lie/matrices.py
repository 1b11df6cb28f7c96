"""Abstract Lie algebras from spans of matrices closed under the commutator."""
from __future__ import annotations

import logging
from typing import Optional, Sequence

import numpy as np

from crlab.core.matrix import LinearCoordinates, as_vector
from crlab.core.scalars import QI, Field, Gaussian, Q, imag_part, real_part
from crlab.errors import DependentGenerators, NotClosed
from crlab.lie.algebra import LieAlgebra

logger = logging.getLogger(__name__)


def _as_square(matrix, field: Field) -> np.ndarray:
    rows = [as_vector(r, field) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("generator matrices must be square")
    out = np.empty((n, n), dtype=object)
    for i, r in enumerate(rows):
        out[i, :] = r
    return out


def _has_imaginary(mats) -> bool:
    return any(isinstance(x, Gaussian) and x.im for m in mats for row in m for x in row)


def _has_gaussian_entries(mats) -> bool:
    return any(
        isinstance(x, Gaussian) or (isinstance(x, str) and x.rstrip().endswith("i"))
        for m in mats
        for row in m
        for x in row
    )


class MatrixEmbedding:
    """Linear map from abstract coordinates to matrices ``x ↦ Σ x_a M_a``."""

    def __init__(self, matrices: Sequence[np.ndarray], entry_field: Field):
        self.matrices = [m.copy() for m in matrices]
        self.entry_field = entry_field
        self.size = matrices[0].shape[0] if matrices else 0
        self._complex = LinearCoordinates(
            [np.array([QI.coerce(x) for x in m.flat], dtype=object) for m in self.matrices],
            self.size * self.size,
            QI,
        )

    def to_matrix(self, x: Sequence) -> np.ndarray:
        field = QI if self.entry_field.is_complex or any(isinstance(c, Gaussian) for c in x) else Q
        out = np.empty((self.size, self.size), dtype=object)
        out[:, :] = field.zero
        for coef, m in zip(x, self.matrices):
            if coef:
                out = out + field.coerce(coef) * np.vectorize(field.coerce, otypes=[object])(m)
        return out

    def coordinates(self, matrix) -> Optional[np.ndarray]:
        """Complex coordinates of a matrix in the span of the generators, or None."""
        flat = np.array([QI.coerce(x) for row in matrix for x in row], dtype=object)
        return self._complex.solve(flat)


def _real_coordinates(m: np.ndarray, split: bool) -> np.ndarray:
    if not split:
        return np.array([real_part(x) for x in m.flat], dtype=object)
    return np.array([real_part(x) for x in m.flat] + [imag_part(x) for x in m.flat], dtype=object)


def from_matrices(
    mats: Sequence,
    field: Field = Q,
    labels: Optional[Sequence[str]] = None,
    name: str = "matrix-algebra",
):
    """Build the abstract algebra spanned by ``mats`` and its matrix embedding.

    Over ``Q`` the span is taken over the rationals even when the entries are
    Gaussian (a real form given by complex matrices); over ``Q(i)`` it is a
    complex span.
    ----------------------------------------------------------------
    Returns
    -------
    (LieAlgebra, MatrixEmbedding)

    Raises
    ------
    DependentGenerators
        When the matrices are linearly dependent over ``field``.
    NotClosed
        When a commutator leaves the span.
    """
    entry_field = QI if (field.is_complex or _has_gaussian_entries(mats)) else Q
    arrays = [_as_square(m, entry_field) for m in mats]
    if not arrays:
        raise ValueError("at least one generator matrix is required")
    size = arrays[0].shape[0]
    if any(a.shape != (size, size) for a in arrays):
        raise ValueError("generator matrices must share one size")
    if not field.is_complex and not _has_imaginary(arrays):
        arrays = [np.vectorize(real_part, otypes=[object])(a) for a in arrays]
        entry_field = Q
    split = not field.is_complex and entry_field.is_complex
    if field.is_complex:
        flat = [np.array([QI.coerce(x) for x in a.flat], dtype=object) for a in arrays]
        length = size * size
    else:
        flat = [_real_coordinates(a, split) for a in arrays]
        length = len(flat[0])
    coords = LinearCoordinates(flat, length, field)
    if coords.rank < len(arrays):
        raise DependentGenerators(
            f"{len(arrays)} generator matrices span only a {coords.rank}-dimensional space",
            count=len(arrays),
            rank=coords.rank,
        )
    labels = list(labels) if labels else [f"e{k + 1}" for k in range(len(arrays))]
    brackets = {}
    for i in range(len(arrays)):
        for j in range(i + 1, len(arrays)):
            commutator = arrays[i] @ arrays[j] - arrays[j] @ arrays[i]
            target = (
                np.array([QI.coerce(x) for x in commutator.flat], dtype=object)
                if field.is_complex
                else _real_coordinates(commutator, split)
            )
            c = coords.solve(target)
            if c is None:
                raise NotClosed(
                    f"[{labels[i]}, {labels[j]}] is not in the span of the generators",
                    pair=[i, j],
                )
            terms = {k: v for k, v in enumerate(c) if v}
            if terms:
                brackets[(i, j)] = terms
    algebra = LieAlgebra(name, field, labels, brackets)
    logger.info("built %s from %d matrices of size %d", name, len(arrays), size)
    return algebra, MatrixEmbedding(arrays, entry_field)
