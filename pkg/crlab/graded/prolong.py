"""Tanaka prolongation of a fundamental negative part, degree by degree.

An element of ``G_p`` (``p >= 0``) is stored by its actions on the negative
part: ``actions[k]`` is the matrix of ``Î¾ â¦ [Î·, Î¾]`` from ``G_{-k}`` to
``G_{p-k}``, columns indexed by the basis of ``G_{-k}``. Because the
negative part is generated by ``G_{-1}``, ``actions[1]`` determines the
element; the other actions are rebuilt from a presentation of the negative
part by brackets ``[G_{-k+1}, G_{-1}]``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from crlab.core.matrix import Echelon, LinearCoordinates, as_vector, unit, zeros
from crlab.errors import CapReached, NotDerivations, NotFundamental, PreconditionViolated
from crlab.graded.graded import GradedLieAlgebra, g_prime, is_fundamental, linear_kernel

logger = logging.getLogger(__name__)

Actions = Dict[int, np.ndarray]


def _blank(rows: int, cols: int, field) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out[:, :] = field.zero
    return out


def _apply(matrix: np.ndarray, v: Sequence, field) -> np.ndarray:
    out = zeros(matrix.shape[0], field)
    for j, c in enumerate(v):
        if c:
            out = out + c * matrix[:, j]
    return out


def _flatten(matrix: np.ndarray, field) -> np.ndarray:
    """Column-major entries, matching the column-by-column identification of brackets."""
    return as_vector([matrix[r, c] for c in range(matrix.shape[1]) for r in range(matrix.shape[0])], field)


def _as_matrix(matrix, rows: int, cols: int, field) -> np.ndarray:
    out = _blank(rows, cols, field)
    data = getattr(matrix, "matrix", matrix)
    for r in range(rows):
        for c in range(cols):
            out[r, c] = field.coerce(data[r][c])
    return out


class Prolongation(GradedLieAlgebra):
    """``m â G_0 â G_1 â ...`` computed up to a cap."""

    def __init__(self, m: GradedLieAlgebra):
        self.m = m
        self.field = m.field
        self.name = f"prolong({m.name})"
        self.mu = m.depth
        self.components: Dict[int, List[Actions]] = {}
        self._coordinates: Dict[int, LinearCoordinates] = {}
        self.terminated = False
        self.first_zero_degree: Optional[int] = None
        self.max_degree: Optional[int] = None
        self.presentation = self._presentation()

    def _presentation(self) -> Dict[int, List[List[Tuple[int, int, object]]]]:
        """For ``k >= 2``: each basis vector of ``G_{-k}`` as ``Î£ c [z_i, Î¾_j]``."""
        m = self.m
        if not is_fundamental(m):
            raise NotFundamental("the negative part is not generated by G_-1", dims=m.dims)
        out = {}
        for k in range(2, self.mu + 1):
            pairs, family = [], []
            for i in range(m.dim(-k + 1)):
                for j in range(m.dim(-1)):
                    pairs.append((i, j))
                    family.append(m.bracket(-k + 1, m.basis_vector(-k + 1, i), -1, m.basis_vector(-1, j)))
            solver = LinearCoordinates(family, m.dim(-k), self.field)
            rows = []
            for l in range(m.dim(-k)):
                c = solver.solve(unit(m.dim(-k), l, self.field))
                rows.append([(i, j, c[t]) for t, (i, j) in enumerate(pairs) if c[t]])
            out[k] = rows
        return out

    @property
    def dims(self) -> Dict[int, int]:
        out = {p: n for p, n in self.m.dims.items() if p < 0}
        out.update({p: len(c) for p, c in self.components.items() if c})
        return out

    def labels(self, p: int) -> List[str]:
        return self.m.labels(p) if p < 0 else super().labels(p)

    def actions(self, p: int, i: int) -> Actions:
        return self.components[p][i]

    def restriction(self, p: int, i: int) -> np.ndarray:
        return _flatten(self.components[p][i][1], self.field)

    def _act(self, p: int, x: np.ndarray, k: int, v: np.ndarray) -> np.ndarray:
        out = self.zero(p - k)
        for xi, actions in zip(x, self.components.get(p, [])):
            if xi and k in actions:
                out = out + xi * _apply(actions[k], v, self.field)
        return out

    def _bracket(self, a, x, b, y):
        if a < 0 and b < 0:
            return self.m.bracket(a, x, b, y)
        if a >= 0 and b < 0:
            return self._act(a, x, -b, y)
        if a < 0:
            return -self._act(b, y, -a, x)
        return self._nonnegative(a, x, b, y)

    def _nonnegative(self, p, x, r, y) -> np.ndarray:
        """Identify ``[Î·, Î¸]`` through ``[[Î·, Î¸], Î¾] = [Î·, [Î¸, Î¾]] - [Î¸, [Î·, Î¾]]`` on ``G_{-1}``."""
        columns = []
        for j in range(self.dim(-1)):
            xi = self.basis_vector(-1, j)
            first = self.bracket(p, x, r - 1, self.bracket(r, y, -1, xi))
            second = self.bracket(r, y, p - 1, self.bracket(p, x, -1, xi))
            columns.extend(first - second)
        coords = self._coordinates[p + r].solve(as_vector(columns, self.field))
        assert coords is not None, f"bracket of degrees {p} and {r} is not a derivation"
        return coords

    def _register(self, p: int, elements: List[Actions]) -> None:
        self.components[p] = elements
        if elements:
            self._coordinates[p] = LinearCoordinates(
                [_flatten(e[1], self.field) for e in elements], self.dim(p - 1) * self.dim(-1), self.field
            )

    def extend(self, p: int, m1: np.ndarray) -> Actions:
        """Rebuild the actions on ``G_{-k}`` (``k >= 2``) from the action on ``G_{-1}``."""
        actions: Actions = {1: m1}
        for k in range(2, self.mu + 1):
            a = _blank(self.dim(p - k), self.m.dim(-k), self.field)
            for l, terms in enumerate(self.presentation[k]):
                col = self.zero(p - k)
                for i, j, c in terms:
                    z = self.basis_vector(-k + 1, i)
                    xi = self.basis_vector(-1, j)
                    col = col + c * (
                        self.bracket(p - k + 1, actions[k - 1][:, i], -1, xi)
                        + self.bracket(-k + 1, z, p - 1, m1[:, j])
                    )
                a[:, l] = col
            actions[k] = a
        return actions

    def defect(self, p: int, actions: Actions) -> List:
        """Residuals of ``Î·[x, y] = [Î·x, y] + [x, Î·y]`` on basis pairs of the negative part."""
        out = []
        for a in range(1, self.mu + 1):
            for b in range(a, self.mu + 1):
                target = p - a - b
                if not self.dim(target):
                    continue
                for i in range(self.m.dim(-a)):
                    x = self.basis_vector(-a, i)
                    for j in range(self.m.dim(-b)):
                        if a == b and j <= i:
                            continue
                        y = self.basis_vector(-b, j)
                        if a + b <= self.mu:
                            lhs = _apply(actions[a + b], self.m.bracket(-a, x, -b, y), self.field)
                        else:
                            lhs = self.zero(target)
                        rhs = self.bracket(p - a, actions[a][:, i], -b, y) + self.bracket(-a, x, p - b, actions[b][:, j])
                        out.extend(lhs - rhs)
        return out

    def solve_degree(self, p: int, commuting_with: Optional[np.ndarray] = None) -> List[Actions]:
        """All degree-``p`` derivations, optionally commuting with an operator on ``G_{-1}`` (``p = 0``)."""
        rows, cols = self.dim(p - 1), self.dim(-1)
        unknowns = rows * cols
        if not unknowns:
            return []
        candidates, defects = [], []
        for u in range(unknowns):
            c, r = divmod(u, rows)
            m1 = _blank(rows, cols, self.field)
            m1[r, c] = self.field.one
            actions = self.extend(p, m1)
            residual = self.defect(p, actions)
            if commuting_with is not None:
                residual.extend((m1.dot(commuting_with) - commuting_with.dot(m1)).flat)
            candidates.append(actions)
            defects.append(residual)
        ech = Echelon(unknowns, self.field)
        for e in range(len(defects[0])):
            row = {u: d[e] for u, d in enumerate(defects) if d[e]}
            if row:
                ech.add(row)
        logger.debug("degree %d: %d unknowns, %d equations, rank %d", p, unknowns, len(defects[0]), ech.rank)
        return [self._combine(candidates, coeffs) for coeffs in ech.kernel()]

    def _combine(self, candidates: List[Actions], coeffs: Sequence) -> Actions:
        out: Actions = {}
        for c, actions in zip(coeffs, candidates):
            if not c:
                continue
            for k, mat in actions.items():
                out[k] = out[k] + c * mat if k in out else c * mat
        return out

    def to_json(self) -> dict:
        out = super().to_json()
        out.update(
            {
                "terminated": self.terminated,
                "first_zero_degree": self.first_zero_degree,
                "max_degree": self.max_degree,
            }
        )
        return out


def degree_zero_derivations(m: GradedLieAlgebra) -> List[np.ndarray]:
    """Actions on ``G_{-1}`` of all degree-zero derivations of ``m``."""
    return [a[1] for a in Prolongation(m.negative_part()).solve_degree(0)]


def j_linear_derivations(m: GradedLieAlgebra, j) -> List[np.ndarray]:
    """Degree-zero derivations commuting with the complex structure ``j`` on ``G_{-1}``."""
    n = m.dim(-1)
    jm = _as_matrix(j, n, n, m.field)
    return [a[1] for a in Prolongation(m.negative_part()).solve_degree(0, commuting_with=jm)]


def graded_degree_zero(g: GradedLieAlgebra) -> List[np.ndarray]:
    """Actions on ``G_{-1}`` of the basis of ``G_0`` of a graded algebra."""
    n = g.dim(-1)
    out = []
    for i in range(g.dim(0)):
        eta = g.basis_vector(0, i)
        m1 = _blank(n, n, g.field)
        for j in range(n):
            m1[:, j] = g.bracket(0, eta, -1, g.basis_vector(-1, j))
        out.append(m1)
    return out


def _degree_zero(pro: Prolongation, g0: Optional[Sequence], j) -> List[Actions]:
    n, field = pro.dim(-1), pro.field
    jm = None if j is None else _as_matrix(j, n, n, field)
    if g0 is None:
        return pro.solve_degree(0, commuting_with=jm)
    ech = Echelon(n * n, field)
    elements = []
    for index, given in enumerate(g0):
        m1 = _as_matrix(given, n, n, field)
        actions = pro.extend(0, m1)
        if any(pro.defect(0, actions)):
            raise NotDerivations(f"g0 element {index} is not a degree-zero derivation", index=index)
        if ech.add({u: x for u, x in enumerate(_flatten(m1, field)) if x}):
            elements.append(actions)
    span = LinearCoordinates([_flatten(e[1], field) for e in elements], n * n, field)
    for a in elements:
        for b in elements:
            commutator = a[1].dot(b[1]) - b[1].dot(a[1])
            flat = _flatten(commutator, field)
            if span.solve(flat) is None:
                raise NotDerivations("g0 is not closed under the commutator")
    if jm is not None:
        columns = [list((e[1].dot(jm) - jm.dot(e[1])).flat) for e in elements]
        kernel = linear_kernel(len(elements), columns, field)
        elements = [pro._combine(elements, c) for c in kernel]
    return elements


def tanaka_prolong(
    m: GradedLieAlgebra,
    g0: Optional[Sequence] = None,
    max_degree: Optional[int] = None,
    j=None,
) -> Prolongation:
    """Prolong the negative part of ``m`` from the degree-zero algebra ``g0``.

    ``g0`` lists matrices acting on ``G_{-1}``; by default every degree-zero
    derivation is used (restricted to those commuting with ``j`` when a
    complex structure is given). Degrees are added until one vanishes, after
    which all higher ones vanish too, or until ``max_degree``.

    Raises
    ------
    NotFundamental
        When the negative part is not generated by ``G_-1``.
    NotDerivations
        When ``g0`` is not a subalgebra of degree-zero derivations.
    """
    pro = Prolongation(m.negative_part())
    pro._register(0, _degree_zero(pro, g0, j))
    cap = max_degree if max_degree is not None else 2 * (pro.m.total_dim + pro.dim(0))
    pro.max_degree = cap
    p = 0
    while pro.dim(p):
        if p >= cap:
            break
        p += 1
        pro._register(p, pro.solve_degree(p))
        logger.debug("G_%d: dim %d", p, pro.dim(p))
    if not pro.dim(p):
        pro.terminated = True
        pro.first_zero_degree = p
    logger.info("prolongation of %s: dims %s, terminated %s", m.name, pro.dims, pro.terminated)
    return pro


@dataclass
class FinitenessVerdict:
    finite: bool
    total_dim: int
    dims: Dict[int, int]
    first_zero_degree: int
    k: int
    g_prime_dims: Dict[int, int] = field(default_factory=dict)
    g_prime_vanishes: bool = True

    def to_json(self) -> dict:
        return {
            "finite": self.finite,
            "total_dim": self.total_dim,
            "dims": {str(p): n for p, n in sorted(self.dims.items())},
            "first_zero_degree": self.first_zero_degree,
            "k": self.k,
            "g_prime_dims": {str(p): n for p, n in sorted(self.g_prime_dims.items())},
            "g_prime_vanishes": self.g_prime_vanishes,
        }


def finiteness_check(pro: Prolongation, k) -> FinitenessVerdict:
    """Verify ``Gâ²_{2k+1} = 0`` and report the first vanishing degree.

    ``finite`` holds only when the prolongation terminated and ``Gâ²_{2k+1}``
    vanishes; a nonzero ``Gâ²_{2k+1}`` means ``k`` does not belong to this
    prolongation and is logged as a warning.

    Raises
    ------
    CapReached
        When the prolongation stopped at its cap with a nonzero top degree.
    """
    if k is None or k == math.inf:
        raise PreconditionViolated("the degeneracy order must be finite", k=k)
    if not pro.terminated:
        raise CapReached(
            f"prolongation still nonzero at degree {pro.max_degree}",
            max_degree=pro.max_degree,
            dims=pro.dims,
        )
    primes = g_prime(pro)
    odd = 2 * k + 1
    vanishes = primes[odd].is_zero() if odd in primes else True
    if not vanishes:
        logger.warning("G′_%d has dimension %d; k = %s is not the degeneracy order here", odd, primes[odd].dim, k)
    return FinitenessVerdict(
        finite=vanishes,
        total_dim=pro.total_dim,
        dims=dict(pro.dims),
        first_zero_degree=pro.first_zero_degree,
        k=k,
        g_prime_dims={p: s.dim for p, s in primes.items()},
        g_prime_vanishes=vanishes,
    )
