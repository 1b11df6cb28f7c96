from crlab.lie.algebra import (
    LieAlgebra,
    bracket,
    bracket_kernel,
    generated_subalgebra,
    is_ideal,
    is_subalgebra,
    largest_ideal_in,
    validate,
)
from crlab.lie.complexify import ComplexifiedAlgebra, complexify, real_trace
from crlab.lie.matrices import MatrixEmbedding, from_matrices
from crlab.lie.presets import Preset, preset

__all__ = [
    "ComplexifiedAlgebra",
    "LieAlgebra",
    "MatrixEmbedding",
    "Preset",
    "bracket",
    "bracket_kernel",
    "complexify",
    "from_matrices",
    "generated_subalgebra",
    "is_ideal",
    "is_subalgebra",
    "largest_ideal_in",
    "preset",
    "real_trace",
    "validate",
]
