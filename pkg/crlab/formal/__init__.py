from crlab.formal.modules import (
    ModuleGenerators,
    SymmetryOrder,
    SymmetryTable,
    check_module_conditions,
    in_module,
    mixed_bracket_in_module,
    module_coefficients,
    module_generated,
    orbit_closure,
    truncated_symmetries,
)
from crlab.formal.series import (
    BchCoefficients,
    TruncatedMap,
    TruncatedSeries,
    TruncatedVectorField,
    bch_coefficients,
    vf_bracket,
)
from crlab.formal.star import (
    StarRealization,
    anti_homomorphism_defects,
    invariant_fields,
    realization_kernel,
    star_fields,
)

__all__ = [
    "BchCoefficients",
    "ModuleGenerators",
    "StarRealization",
    "SymmetryOrder",
    "SymmetryTable",
    "TruncatedMap",
    "TruncatedSeries",
    "TruncatedVectorField",
    "anti_homomorphism_defects",
    "bch_coefficients",
    "check_module_conditions",
    "in_module",
    "invariant_fields",
    "mixed_bracket_in_module",
    "module_coefficients",
    "module_generated",
    "orbit_closure",
    "realization_kernel",
    "star_fields",
    "truncated_symmetries",
    "vf_bracket",
]
