"""Contact pairs and triples, the canonical filtration and degeneracy orders."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from crlab.core.subspace import Subspace
from crlab.errors import (
    NotContainedInL0,
    NotFundamental,
    NotL0Stable,
    NotSubalgebra,
    NotTransitive,
    PreconditionViolated,
)
from crlab.lie.algebra import (
    LieAlgebra,
    bracket_kernel,
    brackets_of,
    generated_subalgebra,
    is_subalgebra,
    largest_ideal_in,
    normalizes,
)

logger = logging.getLogger(__name__)

DEGENERATE = math.inf


@dataclass(frozen=True)
class ContactPair:
    """``(g0, l0)``; contact when ``l0`` generates ``g0``."""

    algebra: LieAlgebra
    l0: Subspace

    def is_fundamental(self) -> bool:
        return generated_subalgebra(self.algebra, self.l0).is_full()


@dataclass
class ContactFiltration:
    """Terms ``F_h`` for ``-depth <= h <= stabilized_at`` (at least from ``-1``).

    ``term(h)`` extends the family: ``g0`` below the stored range and the
    stabilized tail ``c0`` above it.
    """

    algebra: LieAlgebra
    terms: Dict[int, Subspace]
    depth: int
    stabilized_at: int

    @property
    def c0(self) -> Subspace:
        return self.terms[self.stabilized_at]

    @property
    def indices(self) -> List[int]:
        return sorted(self.terms)

    def term(self, h: int) -> Subspace:
        if h in self.terms:
            return self.terms[h]
        if h < min(self.terms):
            return self.algebra.full()
        return self.c0

    def check_law(self) -> List[Tuple[int, int]]:
        """Index pairs ``(a, b)`` where ``[F_a, F_b] ⊄ F_{a+b}``; empty for a filtration."""
        bad = []
        for a in self.indices:
            for b in self.indices:
                if b < a:
                    continue
                if not brackets_of(self.algebra, self.term(a), self.term(b)) <= self.term(a + b):
                    bad.append((a, b))
        return bad

    def is_h0_module(self, h0: Subspace) -> bool:
        return all(normalizes(self.algebra, h0, self.terms[h]) for h in self.indices)

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "stabilized_at": self.stabilized_at,
            "terms": {str(h): {"dim": s.dim, "basis": s.to_json()} for h, s in sorted(self.terms.items())},
            "c0": self.c0.to_json(),
        }


def contact_filtration(pair: ContactPair) -> ContactFiltration:
    """``F_h = F_{h+1} + [F_{h+1}, F_{-1}]`` downwards, kernels upwards.

    Raises
    ------
    NotFundamental
        When the negative chain stabilizes below ``g0``.
    """
    a, l0 = pair.algebra, pair.l0
    terms: Dict[int, Subspace] = {-1: l0}
    f0 = bracket_kernel(a, l0, l0, l0)
    if f0.is_full():
        depth = 0
    else:
        h = -1
        while not terms[h].is_full():
            grown = terms[h] + brackets_of(a, terms[h], l0)
            if grown == terms[h]:
                raise NotFundamental(
                    f"l0 generates only a {grown.dim}-dimensional subalgebra of {a.name}",
                    reached=grown,
                )
            h -= 1
            terms[h] = grown
            logger.debug("F_%d: dim %d", h, grown.dim)
        depth = -h
    terms[0] = f0
    h = 0
    while True:
        nxt = bracket_kernel(a, l0, l0, terms[h])
        if nxt == terms[h]:
            break
        h += 1
        terms[h] = nxt
        logger.debug("F_%d: dim %d", h, nxt.dim)
    logger.info("contact filtration of %s: depth %d, stabilized at %d, dim c0 %d", a.name, depth, h, terms[h].dim)
    return ContactFiltration(a, terms, depth, h)


def depth(f: ContactFiltration) -> int:
    return f.depth


@dataclass
class ContactTriple:
    """Validated ``(g0, h0, l0)``; build with :func:`make_triple`."""

    pair: ContactPair
    h0: Subspace
    filtration: ContactFiltration = field(repr=False)

    @property
    def algebra(self) -> LieAlgebra:
        return self.pair.algebra

    @property
    def l0(self) -> Subspace:
        return self.pair.l0


def make_triple(pair: ContactPair, h0: Subspace) -> ContactTriple:
    """Validate the clauses of a contact triple.

    Checked in order: fundamental, subalgebra, transitive, contained in l0, l0-stable.
    """
    a = pair.algebra
    filtration = contact_filtration(pair)
    if not is_subalgebra(a, h0):
        raise NotSubalgebra("h0 is not a subalgebra", h0=h0)
    ideal = largest_ideal_in(a, h0)
    if not ideal.is_zero():
        raise NotTransitive("h0 contains a nonzero ideal", ideal=ideal)
    if not h0 <= pair.l0:
        raise NotContainedInL0("h0 is not contained in l0", h0=h0, l0=pair.l0)
    if not normalizes(a, h0, pair.l0):
        raise NotL0Stable("[h0, l0] is not contained in l0", h0=h0, l0=pair.l0)
    return ContactTriple(pair, h0, filtration)


def strict_nondegenerate(t: ContactTriple) -> bool:
    return t.filtration.term(0) == t.h0


def nondegenerate_by_ideals(t: ContactTriple) -> bool:
    """Nondegeneracy through ideals: the largest ideal inside ``l0`` lies in ``h0``."""
    return largest_ideal_in(t.algebra, t.l0) <= t.h0


def degeneracy_order(t: ContactTriple):
    """0 when strict, else the smallest ``k >= 1`` with ``F_k ⊆ h0``, else ``math.inf``."""
    f = t.filtration
    k = next((k for k in range(0, max(f.stabilized_at, 0) + 1) if f.term(k) <= t.h0), DEGENERATE)
    assert (k != DEGENERATE) == nondegenerate_by_ideals(t), "chain and ideal criteria disagree"
    return k


@dataclass
class BracketWitness:
    """``[x, X_0, ..., X_k] = value`` with ``value ∉ l0``."""

    x: np.ndarray
    sequence: List[np.ndarray]
    value: np.ndarray

    def to_json(self) -> dict:
        from crlab.errors import jsonable

        return {
            "x": jsonable(self.x),
            "sequence": [jsonable(s) for s in self.sequence],
            "value": jsonable(self.value),
            "length": len(self.sequence),
        }


def evaluate_iterated(a: LieAlgebra, x: Sequence, sequence: Sequence[Sequence]) -> np.ndarray:
    value = np.array(x, dtype=object)
    for y in sequence:
        value = a.bracket(value, y)
    return value


def bracket_witness(t: ContactTriple, x: Sequence) -> Optional[BracketWitness]:
    """Greedy iterated-bracket certificate descending the filtration; None when ``x ∈ c0``."""
    a, f = t.algebra, t.filtration
    x = a.vector(x)
    if not t.l0.contains(x) or t.h0.contains(x):
        raise PreconditionViolated("x must lie in l0 and outside h0", x=x)
    level = max(h for h in range(-1, f.stabilized_at + 1) if f.term(h).contains(x))
    if level == f.stabilized_at:
        return None
    generators = t.l0.vectors()
    current, sequence = x, []
    for h in range(level, -2, -1):
        target = f.term(h)
        step = next(y for y in generators if not target.contains(a.bracket(current, y)))
        sequence.append(step)
        current = a.bracket(current, step)
    return BracketWitness(x, sequence, current)
