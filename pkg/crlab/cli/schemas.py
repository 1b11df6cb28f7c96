"""Pydantic models for manifests, command inputs and the JSON report."""
from __future__ import annotations

from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

import crlab


class BracketTerm(BaseModel):
    k: int = Field(..., description="Basis index of the output component")
    c: str = Field(..., description="Exact coefficient, e.g. '1' or '-1/2'")


class BracketEntry(BaseModel):
    """``[e_i, e_j] = Σ c e_k`` with ``i < j``."""

    i: int
    j: int
    terms: List[BracketTerm] = Field(default_factory=list)


class AlgebraManifest(BaseModel):
    """A Lie algebra by structure constants or by a basis of matrices.

    ``brackets`` is a list of ``{"i", "j", "terms": [{"k", "c"}]}`` entries;
    the label form ``{"X,Y": {"Z": "1"}}`` is accepted on input as well.
    """

    name: str = Field("algebra", description="Display name")
    field: str = Field("Q", description="Coefficient field of the structure constants")
    dim: Optional[int] = Field(None, description="Dimension; must match the number of basis labels")
    basis: List[str] = Field(default_factory=list, description="Basis labels; e1..eN when only dim is given")
    brackets: Union[List[BracketEntry], Dict[str, Dict[str, str]]] = Field(
        default_factory=list,
        description='Nonzero brackets, e.g. [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}]',
    )
    matrices: Optional[List[List[List[str]]]] = Field(
        None, description="Square matrices spanning a commutator-closed space; replaces brackets"
    )


class SubspaceManifest(BaseModel):
    """A subspace spanned by coordinate vectors in the algebra basis."""

    field: Optional[str] = Field(
        None, description="'Q' or 'Q(i)'; inferred from the entries when omitted"
    )
    vectors: List[List[str]] = Field(default_factory=list, description="Spanning vectors as exact scalars")
    name: Optional[str] = Field(None, description="Optional label")


class ValidateInput(BaseModel):
    """Check the Jacobi identity of an algebra."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")


class ChainInput(BaseModel):
    """Compute the contact filtration or the CR chains."""

    kind: Literal["contact", "cr"] = Field(..., description="Which chain to compute")
    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    l: Optional[str] = Field(None, description="Contact distribution l0 (contact chains)")
    h: Optional[str] = Field(None, description="Isotropy h0; adds the degeneracy order")
    q: Optional[str] = Field(None, description="Complex subalgebra q (CR chains)")


class ClassifyInput(BaseModel):
    """Every nondegeneracy flag of a CR algebra."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    q: str = Field(..., description="Complex subalgebra q")


class GradeInput(BaseModel):
    """Associated graded algebra, Levi form and complex structure."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    l: Optional[str] = Field(None, description="Contact distribution l0")
    q: Optional[str] = Field(None, description="Complex subalgebra q; its real trace is used as l0")


class ProlongInput(BaseModel):
    """Tanaka prolongation of the negative part of the associated graded algebra."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    l: Optional[str] = Field(None, description="Contact distribution l0")
    q: Optional[str] = Field(None, description="Complex subalgebra q")
    g0: Optional[Literal["graded", "all", "j-linear"]] = Field(
        None, description="Degree-zero algebra; 'j-linear' with --q and 'all' otherwise by default"
    )
    max_degree: Optional[int] = Field(None, description="Highest degree to compute")


class RealizeInput(BaseModel):
    """Star fields of a pair (g0, h0) as symmetric-tensor tables."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    h: Optional[str] = Field(None, description="Isotropy h0; zero by default")
    order: Optional[int] = Field(None, description="Truncation order; dim g0 by default")
    basis: Optional[List[str]] = Field(None, description="Basis labels to print; all by default")
    complement: Optional[str] = Field(None, description="Complement V of h0; pivot complement by default")


class SymmetriesInput(BaseModel):
    """Dimensions of truncated symmetries of an invariant distribution."""

    algebra: str = Field(..., description="Algebra manifest path or preset:NAME[:PARAM]")
    h: Optional[str] = Field(None, description="Isotropy h0; zero by default")
    l: Optional[str] = Field(None, description="Real distribution l0")
    q: Optional[str] = Field(None, description="Complex distribution q")
    order: Optional[int] = Field(None, description="Highest truncation order")


class PresetInput(BaseModel):
    """Write a preset algebra and its canonical subspaces as manifests."""

    name: str = Field(..., description="Preset NAME[:PARAM]")
    out: str = Field(..., description="Output directory")


class Report(BaseModel):
    tool: str = "crlab"
    version: str = crlab.__version__
    command: str
    input: dict
    result: Optional[dict] = None
    error: Optional[dict] = None
    timing: Optional[float] = None
