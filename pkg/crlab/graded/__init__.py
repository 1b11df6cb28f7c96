from crlab.graded.graded import (
    AssociatedGraded,
    GradedLieAlgebra,
    TabulatedGradedAlgebra,
    associated_graded,
    check_jacobi,
    g_prime,
    is_fundamental,
    is_transitive,
)
from crlab.graded.prolong import (
    FinitenessVerdict,
    Prolongation,
    degree_zero_derivations,
    finiteness_check,
    graded_degree_zero,
    j_linear_derivations,
    tanaka_prolong,
)
from crlab.graded.structures import (
    ComplexStructureJ,
    LeviForm,
    SymMultilinearMap,
    complex_structure,
    eta_map,
    levi_form,
    levi_nondegenerate,
)

__all__ = [
    "AssociatedGraded",
    "ComplexStructureJ",
    "FinitenessVerdict",
    "GradedLieAlgebra",
    "LeviForm",
    "Prolongation",
    "SymMultilinearMap",
    "TabulatedGradedAlgebra",
    "associated_graded",
    "check_jacobi",
    "complex_structure",
    "degree_zero_derivations",
    "eta_map",
    "finiteness_check",
    "g_prime",
    "graded_degree_zero",
    "is_fundamental",
    "is_transitive",
    "j_linear_derivations",
    "levi_form",
    "levi_nondegenerate",
    "tanaka_prolong",
]
