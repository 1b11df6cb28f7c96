"""Exception hierarchy; every domain error renders a JSON-safe payload."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict


def jsonable(value: Any) -> Any:
    """Convert exact scalars, vectors, subspaces and infinities to JSON values."""
    from crlab.core.scalars import Gaussian, format_scalar

    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return "inf" if math.isinf(value) else value
    if isinstance(value, (Fraction, Gaussian)):
        return format_scalar(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if hasattr(value, "tolist"):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


class CRLabError(Exception):
    """Base class of all domain errors."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details: Dict[str, Any] = details

    def payload(self) -> Dict[str, Any]:
        return {"error": self.code, "message": str(self), **jsonable(self.details)}


class UsageError(CRLabError):
    code = "usage"


class ManifestError(UsageError):
    code = "manifest"


class UnknownPreset(UsageError):
    code = "unknown_preset"


class AmbientMismatch(CRLabError, ValueError):
    code = "ambient_mismatch"


class JacobiViolation(CRLabError):
    code = "jacobi_violation"


class NotClosed(CRLabError):
    code = "not_closed"


class DependentGenerators(CRLabError):
    code = "dependent_generators"


class NotFundamental(CRLabError):
    code = "not_fundamental"


class NotSubalgebra(CRLabError):
    code = "not_subalgebra"


class NotContainedInL0(CRLabError):
    code = "not_contained_in_l0"


class NotL0Stable(CRLabError):
    code = "not_l0_stable"


class NotTransitive(CRLabError):
    code = "not_transitive"


class QNotSubalgebra(CRLabError):
    code = "q_not_subalgebra"


class PreconditionViolated(CRLabError):
    code = "precondition_violated"


class DepthTooSmall(CRLabError):
    code = "depth_too_small"


class NotDerivations(CRLabError):
    code = "not_derivations"


class CapReached(CRLabError):
    code = "cap_reached"


class ComplementInvalid(CRLabError):
    code = "complement_invalid"


class ModuleConditionsViolated(CRLabError):
    code = "module_conditions_violated"


class OrderExhausted(CRLabError):
    code = "order_exhausted"
