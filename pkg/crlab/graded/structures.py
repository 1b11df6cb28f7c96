"""Multilinear maps, the Levi form and the complex structure on ``G_{-1}``."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from crlab.chains.cr import CRAlgebra
from crlab.core.matrix import LinearCoordinates, as_vector, unit, zeros
from crlab.core.scalars import Field, Q, imag_part, real_part
from crlab.core.subspace import Subspace
from crlab.errors import DepthTooSmall, PreconditionViolated, jsonable
from crlab.graded.graded import AssociatedGraded, GradedLieAlgebra, linear_kernel

logger = logging.getLogger(__name__)


@dataclass
class SymMultilinearMap:
    """``h``-linear map ``V^h → W`` stored on every index tuple of basis vectors."""

    arity: int
    dim_in: int
    dim_out: int
    values: Dict[Tuple[int, ...], np.ndarray]
    field: Field = Q

    def __call__(self, *vectors: Sequence) -> np.ndarray:
        out = zeros(self.dim_out, self.field)
        for idx, value in self.values.items():
            c = self.field.one
            for v, i in zip(vectors, idx):
                c = c * v[i]
                if not c:
                    break
            if c:
                out = out + c * value
        return out

    def is_symmetric(self) -> bool:
        for idx, value in self.values.items():
            for perm in set(permutations(idx)):
                other = self.values.get(perm)
                if other is None or any(x != y for x, y in zip(value, other)):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "values": {",".join(map(str, idx)): jsonable(v) for idx, v in sorted(self.values.items()) if any(v)},
        }


def eta_map(g: GradedLieAlgebra, p: int, eta: Sequence, k: int) -> SymMultilinearMap:
    """``(ξ_1, ..., ξ_k) ↦ [η, ξ_1, ..., ξ_k]`` with every ``ξ`` in ``G_{-1}``."""
    n = g.dim(-1)
    values = {}
    for idx in product(range(n), repeat=k):
        v, degree = as_vector(eta, g.field), p
        for j in idx:
            v = g.bracket(degree, v, -1, g.basis_vector(-1, j))
            degree -= 1
        values[idx] = v
    return SymMultilinearMap(k, n, g.dim(p - k), values, g.field)


class LeviForm:
    """``ω(ξ, ξ′) = [ξ, ξ′] ∈ G_{-2}`` on ``G_{-1}``."""

    def __init__(self, g: GradedLieAlgebra):
        self.graded = g
        n = g.dim(-1)
        self.dim = n
        self.table = [[g.bracket(-1, g.basis_vector(-1, i), -1, g.basis_vector(-1, j)) for j in range(n)] for i in range(n)]

    def __call__(self, x: Sequence, y: Sequence) -> np.ndarray:
        return self.graded.bracket(-1, x, -1, y)

    def is_alternating(self) -> bool:
        return all(not any(self.table[i][i]) for i in range(self.dim)) and all(
            all(a == -b for a, b in zip(self.table[i][j], self.table[j][i]))
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def kernel(self) -> Subspace:
        columns = [[c for j in range(self.dim) for c in self.table[i][j]] for i in range(self.dim)]
        return Subspace.span(linear_kernel(self.dim, columns, self.graded.field), self.dim, self.graded.field)

    def is_nondegenerate(self) -> bool:
        return self.kernel().is_zero()

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "values": {f"{i},{j}": jsonable(self.table[i][j]) for i in range(self.dim) for j in range(i + 1, self.dim)},
            "kernel": self.kernel().to_json(),
        }


def levi_form(g: GradedLieAlgebra) -> LeviForm:
    if not g.dim(-2):
        raise DepthTooSmall("G_-2 is zero, the Levi form is not defined", dims=g.dims)
    return LeviForm(g)


def levi_nondegenerate(g: GradedLieAlgebra) -> bool:
    return levi_form(g).is_nondegenerate()


class ComplexStructureJ:
    """Linear operator on ``G_{-1}``; ``matrix[:, j]`` is ``J`` of the ``j``-th basis vector."""

    def __init__(self, matrix: np.ndarray, field: Field = Q):
        self.matrix = matrix
        self.field = field

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, v: Sequence) -> np.ndarray:
        out = zeros(self.dim, self.field)
        for j, c in enumerate(v):
            if c:
                out = out + c * self.matrix[:, j]
        return out

    def squares_to_minus_one(self) -> bool:
        return all(
            all(a == -b for a, b in zip(self(self(e)), e))
            for e in (unit(self.dim, j, self.field) for j in range(self.dim))
        )

    def check_levi_identities(self, g: GradedLieAlgebra) -> List[Tuple[int, int]]:
        """Basis pairs where ``[Jξ, Jξ′] = [ξ, ξ′]`` or ``[Jξ, ξ′] + [ξ, Jξ′] = 0`` fails."""
        bad = []
        if not g.dim(-2):
            return bad
        e = [g.basis_vector(-1, j) for j in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = g.bracket(-1, e[i], -1, e[j])
                jj = g.bracket(-1, self(e[i]), -1, self(e[j]))
                mixed = g.bracket(-1, self(e[i]), -1, e[j]) + g.bracket(-1, e[i], -1, self(e[j]))
                if any(a != b for a, b in zip(jj, w)) or any(mixed):
                    bad.append((i, j))
        return bad

    def to_json(self) -> List[List[str]]:
        return jsonable([[self.matrix[i, j] for j in range(self.dim)] for i in range(self.dim)])


class _ImaginaryPartner:
    """Given real ``X`` in the real trace of ``q``, some ``Y`` with ``X + iY ∈ q``."""

    def __init__(self, q: Subspace):
        self.basis = q.vectors()
        self.n = q.ambient_dim
        family = [as_vector([real_part(x) for x in w], Q) for w in self.basis]
        family += [as_vector([-imag_part(x) for x in w], Q) for w in self.basis]
        self.solver = LinearCoordinates(family, self.n, Q)

    def __call__(self, x: Sequence) -> np.ndarray:
        coeffs = self.solver.solve(x)
        assert coeffs is not None, "vector outside the real trace of q"
        d = len(self.basis)
        y = zeros(self.n, Q)
        for w, alpha, beta in zip(self.basis, coeffs[:d], coeffs[d:]):
            if alpha or beta:
                y = y + as_vector([alpha * imag_part(c) + beta * real_part(c) for c in w], Q)
        return y


def complex_structure(c: CRAlgebra, g: AssociatedGraded) -> ComplexStructureJ:
    """``J(π(X)) = π(Y)`` whenever ``X + iY ∈ q``.

    ``g`` must be the associated graded of the contact pair ``(g0, re q)``.
    """
    f = g.filtration
    if f.algebra is not c.real_form and f.algebra.structure != c.real_form.structure:
        raise PreconditionViolated("graded algebra does not belong to this CR algebra")
    if f.term(-1) != c.tilde0:
        raise PreconditionViolated("graded algebra is not built from the real trace of q")
    partner = _ImaginaryPartner(c.q)
    for x in f.term(0).vectors():
        assert f.term(0).contains(partner(x)), "X in F_0 with X + iY in q but Y outside F_0"
    n = g.dim(-1)
    matrix = np.empty((n, n), dtype=object)
    for j in range(n):
        y = partner(g.lift(-1, g.basis_vector(-1, j)))
        matrix[:, j] = g.project(-1, y)
    j_op = ComplexStructureJ(matrix, g.field)
    assert j_op.squares_to_minus_one(), "J does not square to -1"
    assert not j_op.check_levi_identities(g), "J is not compatible with the Levi form"
    logger.info("complex structure on G_-1 of dimension %d", n)
    return j_op
