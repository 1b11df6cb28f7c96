"""Complexification of a rational Lie algebra and real traces of complex subspaces."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from crlab.core.scalars import QI, Q
from crlab.core.subspace import Subspace
from crlab.lie.algebra import LieAlgebra


@dataclass(frozen=True)
class ComplexifiedAlgebra:
    """``g = g0 ⊗ ℚ(i)`` in the real basis of ``g0``; conjugation acts on coefficients."""

    real_form: LieAlgebra
    algebra: LieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def bracket(self, x: Sequence, y: Sequence) -> np.ndarray:
        return self.algebra.bracket(x, y)

    def conjugate(self, x: Sequence) -> np.ndarray:
        return np.array([QI.coerce(c).conjugate() for c in x], dtype=object)

    def conjugate_subspace(self, s: Subspace) -> Subspace:
        return s.conjugate()

    def complexify_subspace(self, s: Subspace) -> Subspace:
        if s.field.is_complex:
            return s
        return Subspace.span(s.vectors(), s.ambient_dim, QI)

    def real_points(self, s: Subspace) -> Subspace:
        """``s ∩ g0`` as a ℚ-subspace: real and imaginary parts of ``s ∩ s̄``."""
        return (s & s.conjugate()).real_and_imaginary_parts(Q)


def complexify(a: LieAlgebra) -> ComplexifiedAlgebra:
    if a.field.is_complex:
        raise ValueError(f"{a.name} is already defined over Q(i)")
    return ComplexifiedAlgebra(real_form=a, algebra=a.with_field(QI, name=f"{a.name}_C"))


def real_trace(q: Subspace) -> Tuple[Subspace, Subspace]:
    """``(tilde0, breve0)``: the real span of ``re(q)`` and ``q ∩ q̄ ∩ g0``."""
    tilde0 = q.real_and_imaginary_parts(Q)
    breve0 = (q & q.conjugate()).real_and_imaginary_parts(Q)
    return tilde0, breve0
