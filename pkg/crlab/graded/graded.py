"""Graded Lie algebras, the associated graded of a contact filtration and G′."""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from crlab.chains.contact import ContactFiltration
from crlab.core.matrix import Echelon, as_vector, unit, zeros
from crlab.core.scalars import Field, Q
from crlab.core.subspace import Subspace

logger = logging.getLogger(__name__)

BasisElement = Tuple[int, int]


def linear_kernel(n: int, columns: Sequence[Sequence], field: Field) -> List[np.ndarray]:
    """Kernel of the map whose ``i``-th column (image of ``e_i``) is ``columns[i]``."""
    ech = Echelon(n, field)
    length = len(columns[0]) if columns else 0
    for e in range(length):
        row = {i: col[e] for i, col in enumerate(columns) if col[e]}
        if row:
            ech.add(row)
        if ech.rank == n:
            return []
    return ech.kernel()


class GradedLieAlgebra(ABC):
    """``G = ⊕ G_p`` with a basis per degree; elements are coordinate vectors in one ``G_p``."""

    field: Field = Q
    name: str = "graded"

    @property
    @abstractmethod
    def dims(self) -> Dict[int, int]:
        """Nonzero component dimensions by degree."""

    @abstractmethod
    def _bracket(self, a: int, x: np.ndarray, b: int, y: np.ndarray) -> np.ndarray:
        ...

    def dim(self, p: int) -> int:
        return self.dims.get(p, 0)

    @property
    def degrees(self) -> List[int]:
        return sorted(self.dims)

    @property
    def depth(self) -> int:
        return -min([p for p in self.dims if p < 0], default=0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def labels(self, p: int) -> List[str]:
        return [f"g{p}_{i + 1}" for i in range(self.dim(p))]

    def basis_vector(self, p: int, i: int) -> np.ndarray:
        return unit(self.dim(p), i, self.field)

    def zero(self, p: int) -> np.ndarray:
        return zeros(self.dim(p), self.field)

    def bracket(self, a: int, x: Sequence, b: int, y: Sequence) -> np.ndarray:
        """``[x, y] ∈ G_{a+b}`` for ``x ∈ G_a`` and ``y ∈ G_b``."""
        if not self.dim(a) or not self.dim(b) or not self.dim(a + b):
            return self.zero(a + b)
        x, y = as_vector(x, self.field), as_vector(y, self.field)
        if not any(x) or not any(y):
            return self.zero(a + b)
        return self._bracket(a, x, b, y)

    def basis(self) -> List[BasisElement]:
        return [(p, i) for p in self.degrees for i in range(self.dim(p))]

    def negative_part(self) -> "TabulatedGradedAlgebra":
        return TabulatedGradedAlgebra.from_graded(self, [p for p in self.degrees if p < 0], name=f"{self.name}_m")

    def to_json(self) -> dict:
        return {"name": self.name, "dims": {str(p): n for p, n in sorted(self.dims.items())}, "total": self.total_dim}


class TabulatedGradedAlgebra(GradedLieAlgebra):
    """Graded algebra given by the brackets of basis elements.

    ``brackets`` maps ``(a, i, b, j)`` to the coordinates of ``[e_{a,i}, e_{b,j}]``
    in ``G_{a+b}``; the antisymmetric entry is filled in.
    """

    def __init__(
        self,
        dims: Mapping[int, int],
        brackets: Mapping[Tuple[int, int, int, int], Sequence] = None,
        field: Field = Q,
        name: str = "graded",
        labels: Optional[Mapping[int, Sequence[str]]] = None,
    ):
        self.field = field
        self.name = name
        self._dims = {p: n for p, n in dims.items() if n}
        self._labels = {p: list(v) for p, v in (labels or {}).items()}
        self._table: Dict[Tuple[int, int, int, int], np.ndarray] = {}
        for (a, i, b, j), value in (brackets or {}).items():
            v = as_vector(value, field)
            if len(v) != self.dim(a + b):
                raise ValueError(f"bracket ({a}, {i}, {b}, {j}) needs {self.dim(a + b)} coordinates")
            if any(v):
                self._table[(a, i, b, j)] = v
                self._table[(b, j, a, i)] = -v

    @classmethod
    def abelian(cls, n: int, field: Field = Q) -> "TabulatedGradedAlgebra":
        """``V = ℚⁿ`` placed in degree ``-1`` with zero bracket."""
        return cls({-1: n}, {}, field, name=f"abelian:{n}")

    @classmethod
    def from_graded(cls, g: GradedLieAlgebra, degrees: Sequence[int], name: str = "graded") -> "TabulatedGradedAlgebra":
        keep = set(degrees)
        table = {}
        for a in keep:
            for b in keep:
                if a + b not in keep:
                    continue
                for i in range(g.dim(a)):
                    for j in range(g.dim(b)):
                        v = g.bracket(a, g.basis_vector(a, i), b, g.basis_vector(b, j))
                        if any(v):
                            table[(a, i, b, j)] = v
        return cls({p: g.dim(p) for p in keep}, table, g.field, name, {p: g.labels(p) for p in keep})

    @property
    def dims(self) -> Dict[int, int]:
        return self._dims

    def labels(self, p: int) -> List[str]:
        return self._labels.get(p) or super().labels(p)

    def _bracket(self, a, x, b, y):
        out = self.zero(a + b)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    v = self._table.get((a, i, b, j))
                    if v is not None:
                        out = out + (xi * yj) * v
        return out


class AssociatedGraded(GradedLieAlgebra):
    """``G_h = F_h / F_{h+1}`` with representatives taken from the RREF rows of ``F_h``.

    The rows of ``F_h`` whose pivots are not pivots of ``F_{h+1}`` span a
    complement; an element of ``F_h`` reduced modulo ``F_{h+1}`` is read off
    at exactly those pivots. A filtration of depth zero has no negative part
    and its graded algebra is ``G_0 = F_0``, the whole algebra.
    """

    def __init__(self, filtration: ContactFiltration):
        f = filtration
        self.filtration = f
        self.algebra = f.algebra
        self.field = f.algebra.field
        self.name = f"gr({f.algebra.name})"
        self._reps: Dict[int, List[np.ndarray]] = {}
        self._pivots: Dict[int, List[int]] = {}
        self._below: Dict[int, Subspace] = {}
        for h in range(min(f.terms), f.stabilized_at):
            upper, lower = f.term(h), f.term(h + 1)
            self._below[h] = lower
            taken = set(lower.pivots)
            rows = [(p, v) for p, v in zip(upper.pivots, upper.vectors()) if p not in taken]
            if rows:
                self._pivots[h] = [p for p, _ in rows]
                self._reps[h] = [v for _, v in rows]
        if f.depth == 0:
            full = f.term(0)
            self._pivots, self._reps = {0: list(full.pivots)}, {0: full.vectors()}
            self._below = {0: self.algebra.zero()}
        assert not f.check_law(), "filtration law fails, the graded bracket is not well defined"
        logger.info("associated graded of %s: dims %s", self.algebra.name, self.dims)

    @property
    def dims(self) -> Dict[int, int]:
        return {h: len(r) for h, r in self._reps.items()}

    def labels(self, p: int) -> List[str]:
        return [self.algebra.basis[c] for c in self._pivots.get(p, [])]

    def representatives(self, p: int) -> List[np.ndarray]:
        return [r.copy() for r in self._reps.get(p, [])]

    def lift(self, p: int, x: Sequence) -> np.ndarray:
        out = self.algebra.zero_vector()
        for c, r in zip(x, self._reps.get(p, [])):
            if c:
                out = out + c * r
        return out

    def project(self, p: int, v: Sequence) -> np.ndarray:
        """Class of ``v ∈ F_p`` in ``G_p``."""
        assert self.filtration.term(p).contains(v), f"vector is not in F_{p}"
        r = self._below.get(p, self.filtration.term(p + 1)).reduce(v)
        return as_vector([r[c] for c in self._pivots.get(p, [])], self.field)

    def _bracket(self, a, x, b, y):
        z = self.algebra.bracket(self.lift(a, x), self.lift(b, y))
        return self.project(a + b, z)

    def to_json(self) -> dict:
        out = super().to_json()
        out["labels"] = {str(p): self.labels(p) for p in self.degrees}
        return out


def associated_graded(f: ContactFiltration) -> AssociatedGraded:
    return AssociatedGraded(f)


def check_jacobi(g: GradedLieAlgebra) -> Optional[Tuple[BasisElement, BasisElement, BasisElement]]:
    """First basis triple with a nonzero graded Jacobi residual, or None."""
    elements = g.basis()
    for n, (a, i) in enumerate(elements):
        x = g.basis_vector(a, i)
        for m, (b, j) in enumerate(elements[n + 1:], start=n + 1):
            y = g.basis_vector(b, j)
            xy = g.bracket(a, x, b, y)
            for c, k in elements[m + 1:]:
                if not g.dim(a + b + c):
                    continue
                z = g.basis_vector(c, k)
                residual = (
                    g.bracket(a + b, xy, c, z)
                    + g.bracket(b + c, g.bracket(b, y, c, z), a, x)
                    + g.bracket(c + a, g.bracket(c, z, a, x), b, y)
                )
                if any(residual):
                    return (a, i), (b, j), (c, k)
    return None


def is_fundamental(g: GradedLieAlgebra) -> bool:
    """``G_{-1} ≠ 0`` and every ``G_{-h-1}`` is spanned by ``[G_{-h}, G_{-1}]``."""
    if not g.dim(-1):
        return False
    for h in range(1, g.depth):
        image = Subspace.span(
            (
                g.bracket(-h, g.basis_vector(-h, i), -1, g.basis_vector(-1, j))
                for i in range(g.dim(-h))
                for j in range(g.dim(-1))
            ),
            g.dim(-h - 1),
            g.field,
        )
        if not image.is_full():
            return False
    return True


def _action_columns(g: GradedLieAlgebra, p: int, targets: Sequence[int]) -> List[List]:
    """Column ``i``: concatenated coordinates of ``[e_{p,i}, e_{h,j}]`` over ``h`` in ``targets``."""
    columns = []
    for i in range(g.dim(p)):
        eta = g.basis_vector(p, i)
        col = []
        for h in targets:
            for j in range(g.dim(h)):
                col.extend(g.bracket(p, eta, h, g.basis_vector(h, j)))
        columns.append(col)
    return columns


def is_transitive(g: GradedLieAlgebra) -> bool:
    """Every nonnegative component acts faithfully on ``G_{-1}``."""
    for p in g.degrees:
        if p < 0:
            continue
        if linear_kernel(g.dim(p), _action_columns(g, p, [-1]), g.field):
            logger.debug("degree %d is not transitive", p)
            return False
    return True


def g_prime(g: GradedLieAlgebra, up_to: Optional[int] = None) -> Dict[int, Subspace]:
    """``G′_p = {η ∈ G_p | [η, G_h] = 0 for h <= -2}`` for every degree ``p <= up_to``."""
    deep = [h for h in g.degrees if h <= -2]
    out = {}
    for p in g.degrees:
        if up_to is not None and p > up_to:
            continue
        if deep:
            kernel = linear_kernel(g.dim(p), _action_columns(g, p, deep), g.field)
        else:
            kernel = [g.basis_vector(p, i) for i in range(g.dim(p))]
        out[p] = Subspace.span(kernel, g.dim(p), g.field)
    return out
