from crlab.chains.contact import (
    BracketWitness,
    ContactFiltration,
    ContactPair,
    ContactTriple,
    bracket_witness,
    contact_filtration,
    degeneracy_order,
    depth,
    make_triple,
    nondegenerate_by_ideals,
    strict_nondegenerate,
)
from crlab.chains.cr import (
    Classification,
    CRAlgebra,
    CRChain,
    associated_triple,
    classify,
    cr_chains,
    nu,
    weak_nondegenerate,
    wn_hull,
)

__all__ = [
    "BracketWitness",
    "CRAlgebra",
    "CRChain",
    "Classification",
    "ContactFiltration",
    "ContactPair",
    "ContactTriple",
    "associated_triple",
    "bracket_witness",
    "classify",
    "contact_filtration",
    "cr_chains",
    "degeneracy_order",
    "depth",
    "make_triple",
    "nondegenerate_by_ideals",
    "nu",
    "strict_nondegenerate",
    "weak_nondegenerate",
    "wn_hull",
]
