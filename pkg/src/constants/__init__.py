from src.constants.messages import (
    ANALYTIC_DEGREE_KERNEL,
    CONFIG_FILE_UNREADABLE,
    CONTINUOUS_SPECTRUM,
    DEGENERATE_LIMIT,
    DEGREE_BELOW_BOUND,
    EIGEN_COUNT,
    EIGEN_NOT_CONVERGED,
    EIGEN_RESIDUAL,
    EMPTY_EIGENVECTOR_SELECTION,
    ERROR,
    ESSENTIAL_SPECTRUM,
    INVALID_ARGUMENT,
    INVALID_CONFIG,
    INVALID_USAGE,
    LENGTH_MISMATCH,
    MISSING_FIGURE_DATA,
    NOT_ENOUGH_RATE_POINTS,
    NOT_SYMMETRIC,
    NOT_UNIT_VECTOR,
    N_LIST_INVALID,
    OUTSIDE_SUPPORT,
    QUADRATIC_FORM_MISMATCH,
    SOMETHING_WENT_WRONG,
    TOO_FEW_NODES,
    TOO_FEW_POINTS,
    TOO_FEW_PROBES,
    ZERO_DEGREE,
)

__all__ = [
    "SOMETHING_WENT_WRONG",
    "ERROR",
    "INVALID_ARGUMENT",
    "INVALID_USAGE",
    "OUTSIDE_SUPPORT",
    "TOO_FEW_POINTS",
    "TOO_FEW_NODES",
    "TOO_FEW_PROBES",
    "LENGTH_MISMATCH",
    "NOT_SYMMETRIC",
    "EIGEN_COUNT",
    "EIGEN_NOT_CONVERGED",
    "EIGEN_RESIDUAL",
    "ZERO_DEGREE",
    "DEGREE_BELOW_BOUND",
    "QUADRATIC_FORM_MISMATCH",
    "NOT_UNIT_VECTOR",
    "ESSENTIAL_SPECTRUM",
    "ANALYTIC_DEGREE_KERNEL",
    "CONTINUOUS_SPECTRUM",
    "DEGENERATE_LIMIT",
    "NOT_ENOUGH_RATE_POINTS",
    "N_LIST_INVALID",
    "MISSING_FIGURE_DATA",
    "EMPTY_EIGENVECTOR_SELECTION",
    "INVALID_CONFIG",
    "CONFIG_FILE_UNREADABLE",
]
