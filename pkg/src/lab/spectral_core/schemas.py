import numpy as np
from pydantic import field_validator, model_validator

from src.core.utils import FrozenArray, LabModel
from src.lab.model import KernelSpec
from src.lab.spectral_core.enums import LaplacianKindEnum

BOUND_SLACK = 1e-10


def _within(values: np.ndarray, lo: float, hi: float) -> bool:
    return bool(np.all(values >= lo * (1.0 - BOUND_SLACK)) and np.all(values <= hi * (1.0 + BOUND_SLACK)))


class SimilarityMatrix(LabModel):
    """
    Symmetric matrix K = (k(X_i, X_j)) of pairwise similarities.

    Attributes:
        entries (FrozenArray): The n x n matrix, exactly symmetric.
        kernel (KernelSpec | None): The kernel that produced the entries, when known.
    """

    entries: FrozenArray
    kernel: KernelSpec | None = None

    @field_validator("entries")
    def symmetric_nonnegative(cls, val: np.ndarray) -> np.ndarray:
        if val.ndim != 2 or val.shape[0] != val.shape[1]:
            raise ValueError("a similarity matrix must be square")
        if not np.array_equal(val, val.T):
            raise ValueError("a similarity matrix must be exactly symmetric")
        if np.any(val < 0.0):
            raise ValueError("similarities must be non-negative")
        return val

    @model_validator(mode="after")
    def within_kernel_bounds(self) -> "SimilarityMatrix":
        if self.kernel is not None and not _within(self.entries, self.kernel.lower_bound, self.kernel.upper_bound):
            raise ValueError("similarities must lie in [l, ||k||_inf] of the kernel")
        return self

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def upper_bound(self) -> float:
        """
        ||k||_inf when the kernel is known, otherwise the largest entry.
        """
        if self.kernel is not None:
            return self.kernel.upper_bound
        return float(self.entries.max())


class DegreeVector(LabModel):
    """
    Row sums d_i = sum_j k_ij of a similarity matrix.
    """

    values: FrozenArray
    kernel: KernelSpec | None = None

    @model_validator(mode="after")
    def within_kernel_bounds(self) -> "DegreeVector":
        if self.kernel is None:
            return self
        n = self.values.size
        if not _within(self.values, n * self.kernel.lower_bound, n * self.kernel.upper_bound):
            raise ValueError("degrees must lie in [n l, n ||k||_inf] of the kernel")
        return self

    @property
    def n(self) -> int:
        return int(self.values.size)


class LaplacianMatrix(LabModel):
    kind: LaplacianKindEnum
    entries: FrozenArray
    degrees: DegreeVector

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])


class EigenSystem(LabModel):
    """
    The r smallest eigenpairs of a symmetric matrix.

    Attributes:
        eigenvalues (FrozenArray): lambda_1 <= ... <= lambda_r.
        eigenvectors (FrozenArray): n x r matrix; column i is the unit eigenvector of lambda_i.
        degenerate (tuple[bool, ...]): True where lambda_i is within 1e-8 of a neighbouring eigenvalue.
    """

    eigenvalues: FrozenArray
    eigenvectors: FrozenArray
    degenerate: tuple[bool, ...]

    @model_validator(mode="after")
    def check_shapes(self) -> "EigenSystem":
        if self.eigenvectors.ndim != 2 or self.eigenvectors.shape[1] != self.eigenvalues.size:
            raise ValueError("one eigenvector column per eigenvalue is required")
        if len(self.degenerate) != self.eigenvalues.size:
            raise ValueError("one degeneracy flag per eigenvalue is required")
        return self

    @property
    def r(self) -> int:
        return int(self.eigenvalues.size)

    def vector(self, index: int) -> np.ndarray:
        """
        Eigenvector of the eigenvalue at zero-based ``index``.
        """
        return self.eigenvectors[:, index]


class ClusterAssignment(LabModel):
    """
    Bi-partition of the sample: label 1 iff v_j >= threshold.
    """

    labels: tuple[int, ...]
    threshold: float
