"""CR algebras: the descending chains, weak nondegeneracy, hulls and classification."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional

from crlab.chains.contact import (
    ContactPair,
    ContactTriple,
    degeneracy_order,
    make_triple,
    strict_nondegenerate,
)
from crlab.core.scalars import QI
from crlab.core.subspace import Subspace
from crlab.errors import AmbientMismatch, NotFundamental, NotTransitive, QNotSubalgebra
from crlab.lie.algebra import LieAlgebra, bracket_kernel, is_subalgebra
from crlab.lie.complexify import real_trace

logger = logging.getLogger(__name__)


class CRAlgebra:
    """``(g0, q)`` with ``q`` a complex subalgebra of ``g0 ⊗ ℚ(i)``.

    Raises
    ------
    AmbientMismatch
        When ``q`` is not a ``ℚ(i)``-subspace of the right dimension.
    QNotSubalgebra
        When ``q`` is not closed under the bracket.
    """

    def __init__(self, real_form: LieAlgebra, q: Subspace):
        if real_form.field.is_complex:
            raise AmbientMismatch(f"{real_form.name} must be defined over Q", field=real_form.field.name)
        if q.ambient_dim != real_form.dim:
            raise AmbientMismatch(
                f"q lives in dimension {q.ambient_dim}, {real_form.name} has dimension {real_form.dim}",
                expected=real_form.dim,
                got=q.ambient_dim,
            )
        if not q.field.is_complex:
            q = Subspace.span(q.vectors(), q.ambient_dim, QI)
        self.real_form = real_form
        self.complex = real_form.with_field(QI, name=f"{real_form.name}_C")
        self.q = q
        if not is_subalgebra(self.complex, q):
            raise QNotSubalgebra("q is not a complex subalgebra", q=q)

    @cached_property
    def qbar(self) -> Subspace:
        return self.q.conjugate()

    @cached_property
    def q_plus_qbar(self) -> Subspace:
        return self.q + self.qbar

    @cached_property
    def q_cap_qbar(self) -> Subspace:
        return self.q & self.qbar

    @cached_property
    def traces(self):
        return real_trace(self.q)

    @property
    def tilde0(self) -> Subspace:
        return self.traces[0]

    @property
    def breve0(self) -> Subspace:
        return self.traces[1]

    def contact_pair(self) -> ContactPair:
        return ContactPair(self.real_form, self.tilde0)

    def is_fundamental(self) -> bool:
        return self.contact_pair().is_fundamental()

    def __repr__(self):
        return f"CRAlgebra({self.real_form.name!r}, dim_C q={self.q.dim})"


@dataclass
class CRChain:
    qbar_terms: List[Subspace]
    qtilde_terms: List[Subspace]
    length: int
    hull: Subspace

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "qbar": [{"dim": s.dim, "basis": s.to_json()} for s in self.qbar_terms],
            "qtilde": [{"dim": s.dim, "basis": s.to_json()} for s in self.qtilde_terms],
            "hull": {"dim": self.hull.dim, "basis": self.hull.to_json()},
        }


def _stop(terms: List[Subspace]) -> int:
    return next(h for h in range(len(terms) - 1) if terms[h] == terms[h + 1])


def cr_chains(c: CRAlgebra) -> CRChain:
    """Descend ``q̄⁽ʰ⁾ = {Z ∈ q̄⁽ʰ⁻¹⁾ | [Z, q] ⊆ q̃⁽ʰ⁻¹⁾}`` with ``q̃⁽ʰ⁾ = q + q̄⁽ʰ⁾``.

    Both lists end with one repeated term; ``length`` is the first index where
    the chain is stationary.
    """
    g, q = c.complex, c.q
    qbar = [c.qbar]
    qtilde = [c.q_plus_qbar]
    while True:
        nb = bracket_kernel(g, qbar[-1], q, qtilde[-1])
        qbar.append(nb)
        qtilde.append(q + nb)
        logger.debug("chain step %d: dim qbar %d, dim qtilde %d", len(qbar) - 1, nb.dim, qtilde[-1].dim)
        if nb == qbar[-2] and qtilde[-1] == qtilde[-2]:
            break
    nu_bar, nu_tilde = _stop(qbar), _stop(qtilde)
    assert nu_bar == nu_tilde, f"chain lengths differ: {nu_bar} != {nu_tilde}"
    hull = q + qbar[-1]
    assert hull == qtilde[-1], "hull differs from the stable qtilde term"
    chain = CRChain(qbar[: nu_bar + 1], qtilde[: nu_bar + 1], nu_bar, hull)
    logger.info("CR chains of %s: length %d, dim q %d, dim hull %d", c.real_form.name, nu_bar, q.dim, hull.dim)
    return chain


def weak_nondegenerate(c: CRAlgebra, chain: Optional[CRChain] = None) -> bool:
    chain = chain or cr_chains(c)
    return chain.qbar_terms[-1] == c.q_cap_qbar


def nu(c: CRAlgebra, chain: Optional[CRChain] = None):
    """Chain length when weakly nondegenerate, ``math.inf`` otherwise."""
    chain = chain or cr_chains(c)
    return chain.length if weak_nondegenerate(c, chain) else math.inf


def wn_hull(c: CRAlgebra, chain: Optional[CRChain] = None) -> CRAlgebra:
    chain = chain or cr_chains(c)
    if chain.hull == c.q:
        return c
    assert c.q <= chain.hull <= c.q_plus_qbar, "hull must lie between q and q + q̄"
    return CRAlgebra(c.real_form, chain.hull)


def associated_triple(c: CRAlgebra) -> ContactTriple:
    """``(g0, q ∩ q̄ ∩ g0, (q + q̄) ∩ g0)`` as a validated contact triple."""
    pair = c.contact_pair()
    if not pair.is_fundamental():
        raise NotFundamental(f"the real trace of q does not generate {c.real_form.name}", reached=c.tilde0)
    return make_triple(pair, c.breve0)


@dataclass
class Classification:
    fundamental: bool
    transitive: Optional[bool]
    strict: bool
    weak: bool
    nu: object
    chain_length: int
    contact_strict: Optional[bool]
    k: object
    hull_dim: int
    q_dim: int

    @property
    def contact_nondegenerate(self) -> Optional[bool]:
        return None if self.k is None else self.k != math.inf

    def to_json(self) -> dict:
        from crlab.errors import jsonable

        return jsonable(
            {
                "fundamental": self.fundamental,
                "transitive": self.transitive,
                "strict": self.strict,
                "weak": self.weak,
                "nu": self.nu,
                "chain_length": self.chain_length,
                "contact_strict": self.contact_strict,
                "k": self.k,
                "contact_nondegenerate": self.contact_nondegenerate,
                "dim_q": self.q_dim,
                "dim_hull": self.hull_dim,
            }
        )


def classify(c: CRAlgebra) -> Classification:
    """Every nondegeneracy flag at once; ``transitive``/``k`` are None when undefined."""
    chain = cr_chains(c)
    strict = chain.qbar_terms[min(1, chain.length)] == c.q_cap_qbar
    weak = weak_nondegenerate(c, chain)
    fundamental = c.is_fundamental()
    transitive = contact_strict = k = None
    if fundamental:
        try:
            triple = associated_triple(c)
        except NotTransitive:
            transitive = False
        else:
            transitive = True
            contact_strict = strict_nondegenerate(triple)
            k = degeneracy_order(triple)
    result = Classification(
        fundamental=fundamental,
        transitive=transitive,
        strict=strict,
        weak=weak,
        nu=chain.length if weak else math.inf,
        chain_length=chain.length,
        contact_strict=contact_strict,
        k=k,
        hull_dim=chain.hull.dim,
        q_dim=c.q.dim,
    )
    assert not strict or weak, "strict nondegeneracy without weak nondegeneracy"
    if k is not None:
        assert not weak or k != math.inf, "weakly nondegenerate but contact degenerate"
    logger.info("classified %s: strict=%s weak=%s nu=%s k=%s", c.real_form.name, strict, weak, result.nu, k)
    return result
