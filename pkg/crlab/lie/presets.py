"""Named algebras with their canonical subspaces."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from crlab.core.scalars import I, QI, Gaussian, Q
from crlab.core.subspace import Subspace
from crlab.errors import UnknownPreset
from crlab.lie.algebra import LieAlgebra
from crlab.lie.matrices import MatrixEmbedding, from_matrices

logger = logging.getLogger(__name__)


@dataclass
class Preset:
    algebra: LieAlgebra
    subspaces: Dict[str, Subspace] = field(default_factory=dict)
    embedding: Optional[MatrixEmbedding] = None


def heisenberg(n: int = 1) -> Preset:
    """``[X_i, Y_i] = Z``; dimension ``2n + 1``."""
    if n < 1:
        raise UnknownPreset(f"heisenberg:{n} needs n >= 1", name=f"heisenberg:{n}")
    if n == 1:
        labels = ["X", "Y", "Z"]
    else:
        labels = [f"X{k}" for k in range(1, n + 1)] + [f"Y{k}" for k in range(1, n + 1)] + ["Z"]
    brackets = {(k, n + k): {2 * n: 1} for k in range(n)}
    algebra = LieAlgebra(f"heisenberg:{n}", Q, labels, brackets)
    dim = algebra.dim
    l0 = algebra.span(algebra.basis_vector(k) for k in range(2 * n))
    q_vectors = []
    for k in range(n):
        v = [Gaussian(0)] * dim
        v[k] = Gaussian(1)
        v[n + k] = -I
        q_vectors.append(v)
    return Preset(
        algebra,
        {
            "l0": l0,
            "center": algebra.span_of(labels[-1]),
            "q": Subspace.span(q_vectors, dim, QI),
        },
    )


def sl2() -> Preset:
    algebra = LieAlgebra("sl2", Q, ["H", "E", "F"], {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    return Preset(algebra, {"h0": algebra.span_of("E")})


def abelian(n: int) -> Preset:
    if n < 1:
        raise UnknownPreset(f"abelian:{n} needs n >= 1", name=f"abelian:{n}")
    return Preset(LieAlgebra(f"abelian:{n}", Q, [f"e{k}" for k in range(1, n + 1)], {}))


def filiform(n: int = 4) -> Preset:
    """``[e1, e_i] = e_{i+1}`` for ``2 <= i < n``."""
    if n < 3:
        raise UnknownPreset(f"filiform:{n} needs n >= 3", name=f"filiform:{n}")
    brackets = {(0, i): {i + 1: 1} for i in range(1, n - 1)}
    algebra = LieAlgebra(f"filiform:{n}", Q, [f"e{k}" for k in range(1, n + 1)], brackets)
    return Preset(algebra, {"l0": algebra.span_of("e1", "e2")})


def similitude() -> Preset:
    """Heisenberg algebra extended by a dilation ``D`` and a rotation ``R``.

    With ``q = span{X - iY, D - iR}`` the CR algebra is fundamental and
    contact-nondegenerate but not strictly so: its degeneracy order is 1.
    """
    labels = ["X", "Y", "D", "R", "Z"]
    brackets = {
        (0, 1): {4: 1},
        (0, 2): {0: -1},
        (1, 2): {1: -1},
        (2, 4): {4: 2},
        (0, 3): {1: -1},
        (1, 3): {0: 1},
    }
    algebra = LieAlgebra("similitude", Q, labels, brackets)
    zero = Gaussian(0)
    q = Subspace.span(
        [
            [Gaussian(1), -I, zero, zero, zero],
            [zero, zero, Gaussian(1), -I, zero],
        ],
        5,
        QI,
    )
    return Preset(algebra, {"q": q, "l0": algebra.span_of("X", "Y", "D", "R")})


_SU15_BLOCKS = [0, 0, 1, 2, 3, 3]
_SU15_PRIME_BLOCKS = [0, 0, 1, 1, 2, 2]
_W_POSITIONS = [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3)]


def _su15_generators():
    """35 real generators of su(1,5) for the form with ``K = antidiag(1) ⊕ I4`` on the middle.

    The ``t4`` diagonal parameter is eliminated through
    ``t4 = -2 Im(λ) - t1 - t2 - t3`` so that every generator is traceless.
    """
    one, i = Gaussian(1), I

    def blank():
        return [[Gaussian(0)] * 6 for _ in range(6)]

    gens, labels = [], []

    m = blank()
    m[0][0], m[5][5] = one, -one
    gens.append(m)
    labels.append("re_lambda")
    m = blank()
    m[0][0], m[5][5], m[4][4] = i, i, -2 * i
    gens.append(m)
    labels.append("im_lambda")

    for j in range(1, 5):
        m = blank()
        m[j][0], m[5][j] = one, -one
        gens.append(m)
        labels.append(f"re_z{j}")
        m = blank()
        m[j][0], m[5][j] = i, i
        gens.append(m)
        labels.append(f"im_z{j}")
    for j in range(1, 5):
        m = blank()
        m[0][j], m[j][5] = one, -one
        gens.append(m)
        labels.append(f"re_zeta{j}")
        m = blank()
        m[0][j], m[j][5] = i, i
        gens.append(m)
        labels.append(f"im_zeta{j}")
    for k, (a, b) in enumerate(_W_POSITIONS, start=1):
        m = blank()
        m[a][b], m[b][a] = one, -one
        gens.append(m)
        labels.append(f"re_w{k}")
        m = blank()
        m[a][b], m[b][a] = i, i
        gens.append(m)
        labels.append(f"im_w{k}")

    m = blank()
    m[5][0] = i
    gens.append(m)
    labels.append("s")
    m = blank()
    m[0][5] = i
    gens.append(m)
    labels.append("sigma")
    for j in range(1, 4):
        m = blank()
        m[j][j], m[4][4] = i, -i
        gens.append(m)
        labels.append(f"t{j}")
    return gens, labels


def _parabolic(embedding: MatrixEmbedding, blocks: List[int], dim: int) -> Subspace:
    """Complex span of the traceless block-upper-triangular matrices for ``blocks``."""
    size = len(blocks)
    patterns = []
    for r in range(size):
        for c in range(size):
            if r != c and blocks[r] <= blocks[c]:
                m = [[Fraction(0)] * size for _ in range(size)]
                m[r][c] = Fraction(1)
                patterns.append(m)
    for r in range(size - 1):
        m = [[Fraction(0)] * size for _ in range(size)]
        m[r][r], m[r + 1][r + 1] = Fraction(1), Fraction(-1)
        patterns.append(m)
    vectors = []
    for m in patterns:
        coords = embedding.coordinates(m)
        assert coords is not None, "elementary matrix outside the complex span of su(1,5)"
        vectors.append(coords)
    return Subspace.span(vectors, dim, QI)


def su15() -> Preset:
    """su(1,5) with the parabolic ``q`` (blocks 2,1,1,2) and its hull ``q_prime`` (blocks 2,2,2)."""
    gens, labels = _su15_generators()
    algebra, embedding = from_matrices(gens, Q, labels, name="su15")
    q = _parabolic(embedding, _SU15_BLOCKS, algebra.dim)
    q_prime = _parabolic(embedding, _SU15_PRIME_BLOCKS, algebra.dim)
    return Preset(algebra, {"q": q, "q_prime": q_prime}, embedding)


_BUILDERS = {
    "heisenberg": heisenberg,
    "sl2": sl2,
    "abelian": abelian,
    "filiform": filiform,
    "similitude": similitude,
    "su15": su15,
}


def preset_names() -> List[str]:
    return sorted(_BUILDERS)


def preset(name: str) -> Preset:
    """Build ``NAME`` or ``NAME:PARAM`` (for example ``heisenberg:2``)."""
    base, _, param = name.partition(":")
    builder = _BUILDERS.get(base)
    if builder is None:
        raise UnknownPreset(f"unknown preset {name!r}", name=name, known=preset_names())
    if param:
        try:
            value = int(param)
        except ValueError:
            raise UnknownPreset(f"preset parameter must be an integer: {name!r}", name=name)
        if builder in (sl2, similitude, su15):
            raise UnknownPreset(f"preset {base!r} takes no parameter", name=name)
        result = builder(value)
    else:
        if builder is abelian:
            raise UnknownPreset("abelian needs a dimension, for example abelian:3", name=name)
        result = builder()
    logger.debug("preset %s: dim %d, subspaces %s", name, result.algebra.dim, sorted(result.subspaces))
    return result
