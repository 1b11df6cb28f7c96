from crlab.core.matrix import Echelon, LinearCoordinates, Matrix, nullspace, rref
from crlab.core.scalars import QI, Field, Gaussian, Q, field_of, format_scalar, parse_scalar
from crlab.core.subspace import Subspace, contains, subspace_intersect, subspace_leq, subspace_sum

__all__ = [
    "Echelon",
    "Field",
    "Gaussian",
    "LinearCoordinates",
    "Matrix",
    "Q",
    "QI",
    "Subspace",
    "contains",
    "field_of",
    "format_scalar",
    "nullspace",
    "parse_scalar",
    "rref",
    "subspace_intersect",
    "subspace_leq",
    "subspace_sum",
]
