from src.lab.limit_ops.enums import DegreeVariantEnum, ExtensionKindEnum, LimitKindEnum
from src.lab.limit_ops.exceptions import (
    AnalyticDegreeError,
    ContinuousSpectrumError,
    DegreeBelowBoundError,
    EssentialSpectrumError,
    TooFewProbesError,
)
from src.lab.limit_ops.schemas import (
    DegreeFunction,
    EssentialRange,
    Example2Eigenfunction,
    ExtensionFunction,
    LimitEigenSystem,
    LimitOperatorDisc,
)
from src.lab.limit_ops.services import (
    apply_normalized,
    apply_unnormalized,
    build_limit,
    degree_function,
    empirical_degree,
    essential_range,
    example2_eigenfunction,
    example2_g,
    example2_residual,
    example2_roots,
    extend_normalized,
    extend_unnormalized,
    extension_residual,
    limit_eigs,
)

__all__ = [
    "DegreeVariantEnum",
    "ExtensionKindEnum",
    "LimitKindEnum",
    "AnalyticDegreeError",
    "ContinuousSpectrumError",
    "DegreeBelowBoundError",
    "EssentialSpectrumError",
    "TooFewProbesError",
    "DegreeFunction",
    "EssentialRange",
    "Example2Eigenfunction",
    "ExtensionFunction",
    "LimitEigenSystem",
    "LimitOperatorDisc",
    "apply_normalized",
    "apply_unnormalized",
    "build_limit",
    "degree_function",
    "empirical_degree",
    "essential_range",
    "example2_eigenfunction",
    "example2_g",
    "example2_residual",
    "example2_roots",
    "extend_normalized",
    "extend_unnormalized",
    "extension_residual",
    "limit_eigs",
]
