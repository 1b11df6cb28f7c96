"""Orchestration of the command pipelines on loaded manifests."""
from __future__ import annotations

import logging
import math
from typing import List, Optional

from crlab.chains.contact import (
    ContactPair,
    contact_filtration,
    degeneracy_order,
    make_triple,
    nondegenerate_by_ideals,
    strict_nondegenerate,
)
from crlab.chains.cr import CRAlgebra, classify, cr_chains, weak_nondegenerate
from crlab.cli.storage import ManifestStore
from crlab.config import Settings
from crlab.core.subspace import Subspace
from crlab.errors import UsageError, jsonable
from crlab.formal.modules import module_generated, truncated_symmetries
from crlab.formal.star import StarRealization, realization_kernel
from crlab.graded.graded import associated_graded, check_jacobi, is_fundamental, is_transitive
from crlab.graded.prolong import finiteness_check, graded_degree_zero, tanaka_prolong
from crlab.graded.structures import complex_structure, levi_form
from crlab.lie.algebra import LieAlgebra, validate

logger = logging.getLogger(__name__)


class CRLabManager:
    """Runs one command on manifests resolved through a :class:`ManifestStore`."""

    def __init__(self, store: Optional[ManifestStore] = None, settings: Optional[Settings] = None):
        self.store = store or ManifestStore()
        self.settings = settings or Settings()

    def _algebra(self, arg: str) -> LieAlgebra:
        return self.store.load_algebra(arg)

    def _subspace(self, arg: Optional[str], algebra: LieAlgebra) -> Optional[Subspace]:
        return None if arg is None else self.store.load_subspace(arg, algebra)

    @staticmethod
    def _one_of(l: Optional[str], q: Optional[str]) -> None:
        if (l is None) == (q is None):
            raise UsageError("give exactly one of --l and --q")

    def validate(self, algebra: str) -> dict:
        """
        Check the Jacobi identity.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or ``preset:NAME[:PARAM]``.

        Returns
        -------
        dict
            Name, dimension, field and basis labels.
        """
        return validate(self._algebra(algebra))

    def chain_contact(self, algebra: str, l: str, h: Optional[str] = None) -> dict:
        """
        Contact filtration of ``(g0, l0)``; with ``h`` also the degeneracy order of the triple.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        l : str
            Subspace argument for ``l0``.
        h : str, optional
            Subspace argument for ``h0``.
        """
        a = self._algebra(algebra)
        pair = ContactPair(a, self.store.load_subspace(l, a))
        result = contact_filtration(pair).to_json()
        if h is not None:
            triple = make_triple(pair, self.store.load_subspace(h, a))
            result.update(
                {
                    "strict": strict_nondegenerate(triple),
                    "nondegenerate": nondegenerate_by_ideals(triple),
                    "k": degeneracy_order(triple),
                }
            )
        return jsonable(result)

    def chain_cr(self, algebra: str, q: str) -> dict:
        """
        Descending CR chains, the hull and weak nondegeneracy.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        q : str
            Subspace argument for ``q``.
        """
        a = self._algebra(algebra)
        c = CRAlgebra(a, self.store.load_subspace(q, a))
        chain = cr_chains(c)
        weak = weak_nondegenerate(c, chain)
        result = chain.to_json()
        result.update({"weak": weak, "nu": chain.length if weak else math.inf, "hull_is_q": chain.hull == c.q})
        return jsonable(result)

    def classify(self, algebra: str, q: str) -> dict:
        a = self._algebra(algebra)
        return classify(CRAlgebra(a, self.store.load_subspace(q, a))).to_json()

    def _graded(self, algebra: str, l: Optional[str], q: Optional[str]):
        self._one_of(l, q)
        a = self._algebra(algebra)
        c = None
        if q is not None:
            c = CRAlgebra(a, self.store.load_subspace(q, a))
            pair = c.contact_pair()
        else:
            pair = ContactPair(a, self.store.load_subspace(l, a))
        return c, associated_graded(contact_filtration(pair))

    def grade(self, algebra: str, l: Optional[str] = None, q: Optional[str] = None) -> dict:
        """
        Associated graded algebra with its Levi form and, for a CR algebra, ``J``.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        l, q : str
            Exactly one: a contact distribution or a complex subalgebra.
        """
        c, g = self._graded(algebra, l, q)
        result = g.to_json()
        result.update(
            {
                "fundamental": is_fundamental(g),
                "transitive": is_transitive(g),
                "jacobi_violation": check_jacobi(g),
            }
        )
        if g.dim(-2):
            result["levi_form"] = levi_form(g).to_json()
        if c is not None and g.dim(-1):
            result["J"] = complex_structure(c, g).to_json()
        return jsonable(result)

    def prolong(
        self,
        algebra: str,
        l: Optional[str] = None,
        q: Optional[str] = None,
        g0: Optional[str] = None,
        max_degree: Optional[int] = None,
    ) -> dict:
        """
        Tanaka prolongation of the negative part of the associated graded algebra.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        l, q : str
            Exactly one: a contact distribution or a complex subalgebra.
        g0 : {"graded", "all", "j-linear"}, optional
            Degree-zero algebra; ``j-linear`` with ``q`` and ``all`` otherwise.
        max_degree : int, optional
            Cap; the settings value or the automatic cap when omitted.

        Returns
        -------
        dict
            Component dimensions, termination and, for a contact-nondegenerate
            CR algebra, the finiteness verdict.
        """
        c, g = self._graded(algebra, l, q)
        g0 = g0 or ("j-linear" if c is not None else "all")
        if g0 == "j-linear" and c is None:
            raise UsageError("--g0 j-linear needs --q")
        max_degree = max_degree if max_degree is not None else self.settings.max_degree
        if g0 == "graded":
            pro = tanaka_prolong(g, graded_degree_zero(g), max_degree)
        elif g0 == "j-linear":
            pro = tanaka_prolong(g, None, max_degree, complex_structure(c, g).matrix)
        else:
            pro = tanaka_prolong(g, None, max_degree)
        result = pro.to_json()
        result["g0"] = g0
        if c is not None and pro.terminated:
            k = classify(c).k
            if k is not None and k != math.inf:
                result["finiteness"] = finiteness_check(pro, k).to_json()
        if not pro.terminated:
            result["verdict"] = "cap_reached"
        return jsonable(result)

    def _realization(self, algebra: str, h: Optional[str], complement: Optional[str] = None, order: Optional[int] = None):
        a = self._algebra(algebra)
        h0 = self._subspace(h, a) or a.zero()
        v = self._subspace(complement, a)
        order = order if order is not None else self.settings.default_order
        return StarRealization(a, h0, v, order)

    def realize(
        self,
        algebra: str,
        h: Optional[str] = None,
        order: Optional[int] = None,
        basis: Optional[List[str]] = None,
        complement: Optional[str] = None,
    ) -> dict:
        """
        Star fields ``R*`` and ``L*`` as symmetric-tensor tables, with the realization kernel.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        h : str, optional
            Isotropy ``h0``; zero when omitted.
        order : int, optional
            Truncation order; ``dim g0`` when omitted.
        basis : list of str, optional
            Labels to print.
        complement : str, optional
            Complement ``V``.
        """
        r = self._realization(algebra, h, complement, order)
        if basis:
            unknown = [b for b in basis if b not in r.algebra.basis]
            if unknown:
                raise UsageError(f"unknown basis labels {unknown}", known=list(r.algebra.basis))
        result = r.to_json(basis)
        result["kernel"] = realization_kernel(r).to_json()
        return jsonable(result)

    def symmetries(
        self,
        algebra: str,
        h: Optional[str] = None,
        l: Optional[str] = None,
        q: Optional[str] = None,
        order: Optional[int] = None,
    ) -> dict:
        """
        Truncated symmetries of the module of a real ``l0`` or a complex ``q``.
        ----------------------------------------------------------------
        Parameters
        ----------
        algebra : str
            Manifest path or preset.
        h : str, optional
            Isotropy ``h0``; zero when omitted.
        l, q : str
            Exactly one distribution.
        order : int, optional
            Highest truncation order.
        """
        self._one_of(l, q)
        r = self._realization(algebra, h, None, order)
        dist = self.store.load_subspace(l if l is not None else q, r.algebra)
        table = truncated_symmetries(r, dist)
        result = table.to_json()
        result["recovered"] = module_generated(r, dist, 0).recovered.to_json()
        return jsonable(result)

    def export_preset(self, name: str, out: str) -> dict:
        return {"preset": name, "written": self.store.write_preset(name, out)}
