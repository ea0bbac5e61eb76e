from functools import cached_property

import numpy as np
from pydantic import Field, model_validator

from src.core.utils import FrozenArray, LabModel
from src.lab.limit_ops.enums import DegreeVariantEnum, ExtensionKindEnum, LimitKindEnum
from src.lab.model import KernelSpec, QuadratureGrid, SampleSet, check_in_support
from src.lab.model.schemas import EXAMPLE2_SUPPORT
from src.lab.spectral_core import EigenSystem

EXAMPLE2_DEGREE_SLOPE = 1.5


class DegreeFunction(LabModel):
    """
    The degree function d(x) = int k(x, y) dP(y), evaluable anywhere on the support.

    Attributes:
        variant (DegreeVariantEnum): Analytic Example 2 formula or quadrature sum.
        kernel (KernelSpec): The similarity kernel.
        grid (QuadratureGrid | None): The quadrature grid (quadrature variant only).
    """

    variant: DegreeVariantEnum
    kernel: KernelSpec
    grid: QuadratureGrid | None = None

    @model_validator(mode="after")
    def grid_matches_variant(self) -> "DegreeFunction":
        if (self.variant == DegreeVariantEnum.QUADRATURE) != (self.grid is not None):
            raise ValueError("a quadrature grid is required by, and only by, the quadrature variant")
        return self

    @property
    def support(self) -> tuple[float, float]:
        if self.grid is None:
            return EXAMPLE2_SUPPORT
        return self.grid.density.support

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate d without the support check.
        """
        x = np.asarray(x, dtype=np.float64)
        if self.grid is None:
            return EXAMPLE2_DEGREE_SLOPE * x
        flat = self.kernel.matrix(x.ravel(), self.grid.nodes) @ self.grid.weights
        return flat.reshape(x.shape)

    def __call__(self, x: np.ndarray | float) -> np.ndarray | float:
        check_in_support(self.support, x)
        values = self.evaluate(x)
        return float(values) if np.ndim(values) == 0 else values


class EssentialRange(LabModel):
    """
    rg(d) = [inf d, sup d], the essential spectrum of the unnormalized limit operator.
    """

    lo: float
    hi: float

    @model_validator(mode="after")
    def ordered(self) -> "EssentialRange":
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        return self

    def contains(self, value: float, margin: float = 0.0) -> bool:
        return self.lo - margin <= value <= self.hi + margin


class LimitOperatorDisc(LabModel):
    """
    A limit operator discretized on a quadrature grid and conjugated by sqrt(w) into a symmetric matrix.

    Attributes:
        kind (LimitKindEnum): T or U.
        grid (QuadratureGrid): The grid the operator lives on.
        kernel (KernelSpec): The similarity kernel.
        matrix (FrozenArray): A_ij = sqrt(w_i) h(x_i, x_j) sqrt(w_j) for T;
            B_ij = d(x_i) [i = j] - sqrt(w_i) k(x_i, x_j) sqrt(w_j) for U.
        degree_values (FrozenArray): d(x_i) at the grid nodes.
    """

    kind: LimitKindEnum
    grid: QuadratureGrid
    kernel: KernelSpec
    matrix: FrozenArray
    degree_values: FrozenArray

    @property
    def size(self) -> int:
        return self.grid.size


class LimitEigenSystem(EigenSystem):
    """
    Eigenpairs of a limit operator; eigenvector columns hold eigenfunction values at the grid
    nodes, normalized in L2(P).
    """

    nodes: FrozenArray

    def function(self, index: int, x: np.ndarray) -> np.ndarray:
        """
        Piecewise-linear interpolation of eigenfunction ``index`` at the points ``x``.
        """
        return np.interp(np.asarray(x, dtype=np.float64), self.nodes, self.eigenvectors[:, index])


class ExtensionFunction(LabModel):
    """
    Extension of a sample eigenvector to a function on the whole support.

    Normalized: f(x) = (1/n) sum_j h_n(x, X_j) v_j / (1 - lambda), with v an eigenvector of the
    symmetric normalized Laplacian. Unnormalized: f(x) = (1/n) sum_j k(x, X_j) v_j / (d_n(x) - lambda),
    with v an eigenvector of (D - K) / n. Both reproduce v at the sample points.
    """

    kind: ExtensionKindEnum
    sample: SampleSet
    kernel: KernelSpec
    coefficients: FrozenArray
    eigenvalue: float

    @model_validator(mode="after")
    def one_coefficient_per_point(self) -> "ExtensionFunction":
        if self.coefficients.shape != (self.sample.n,):
            raise ValueError("one coefficient per sample point is required")
        return self

    @cached_property
    def sample_degrees(self) -> np.ndarray:
        """
        d_n(X_j) = d_j / n at the sample points.
        """
        points = self.sample.points
        return self.kernel.matrix(points, points).mean(axis=1)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        similarities = self.kernel.matrix(x, self.sample.points)
        degree_x = similarities.mean(axis=1)

        if self.kind == ExtensionKindEnum.NORMALIZED:
            normalized = similarities / np.sqrt(degree_x[:, None] * self.sample_degrees[None, :])
            return (normalized @ self.coefficients) / self.sample.n / (1.0 - self.eigenvalue)
        return (similarities @ self.coefficients) / self.sample.n / (degree_x - self.eigenvalue)

    def __call__(self, x: np.ndarray | float) -> np.ndarray | float:
        check_in_support(self.kernel.support, x)
        values = self.evaluate(x)
        return float(values[0]) if np.ndim(x) == 0 else values


class Example2Eigenfunction(LabModel):
    """
    f(x) = beta x / (1.5 x - lambda), the closed-form eigenfunction candidate of the unnormalized
    Example 2 limit operator, scaled to unit L2(P) norm.

    Attributes:
        eigenvalue (float): lambda, outside [1.5, 3].
        s (float): Level of the Example 2 density on [4/3, 5/3).
        beta (float): The scale; f is an eigenfunction iff beta = int y f(y) p(y) dy.
    """

    eigenvalue: float
    s: float = Field(gt=0.0, lt=3.0)
    beta: float

    def __call__(self, x: np.ndarray | float) -> np.ndarray | float:
        check_in_support(EXAMPLE2_SUPPORT, x)
        x = np.asarray(x, dtype=np.float64)
        values = self.beta * x / (EXAMPLE2_DEGREE_SLOPE * x - self.eigenvalue)
        return float(values) if values.ndim == 0 else values
