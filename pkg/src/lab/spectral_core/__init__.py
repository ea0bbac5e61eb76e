from src.lab.spectral_core.enums import ClusteringKindEnum, LaplacianKindEnum
from src.lab.spectral_core.exceptions import (
    EigenConvergenceError,
    EigenCountError,
    EigenResidualError,
    LengthMismatchError,
    NotSymmetricError,
    NotUnitVectorError,
    QuadraticFormError,
    ZeroDegreeError,
)
from src.lab.spectral_core.schemas import (
    ClusterAssignment,
    DegreeVector,
    EigenSystem,
    LaplacianMatrix,
    SimilarityMatrix,
)
from src.lab.spectral_core.services import (
    align_sign,
    bicluster,
    build_laplacian,
    build_similarity,
    check_unit,
    degrees,
    eig_generalized,
    eig_sym,
    quadratic_form,
    quadratic_form_tolerance,
    rw_from_sym,
    threshold_cluster,
)

__all__ = [
    "ClusteringKindEnum",
    "LaplacianKindEnum",
    "EigenConvergenceError",
    "EigenCountError",
    "EigenResidualError",
    "LengthMismatchError",
    "NotSymmetricError",
    "NotUnitVectorError",
    "QuadraticFormError",
    "ZeroDegreeError",
    "ClusterAssignment",
    "DegreeVector",
    "EigenSystem",
    "LaplacianMatrix",
    "SimilarityMatrix",
    "align_sign",
    "bicluster",
    "build_laplacian",
    "build_similarity",
    "check_unit",
    "degrees",
    "eig_generalized",
    "eig_sym",
    "quadratic_form",
    "quadratic_form_tolerance",
    "rw_from_sym",
    "threshold_cluster",
]
