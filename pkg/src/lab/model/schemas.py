from functools import cached_property
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import Field, NonNegativeFloat, PositiveFloat, computed_field, field_validator, model_validator
from scipy.stats import norm

from src.core.utils import FrozenArray, LabModel
from src.lab.model.enums import KernelKindEnum

EXAMPLE2_SUPPORT = (1.0, 2.0)
EXAMPLE2_BREAKPOINTS = (4.0 / 3.0, 5.0 / 3.0)
MIXTURE_SUPPORT = (0.0, 10.0)


class PiecewiseExample2Density(LabModel):
    """
    Piecewise constant density on [1, 2]: p(x) = s on [4/3, 5/3) and (3 - s) / 2 elsewhere.

    For small s the density has two clearly separated high density regions. Its first moment
    is 1.5 for every s because p is symmetric about 1.5.
    """

    kind: Literal["example2"] = "example2"
    s: float = Field(gt=0.0, lt=3.0)
    support: tuple[float, float] = EXAMPLE2_SUPPORT

    @field_validator("support")
    def support_is_unit_interval(cls, val: tuple[float, float]) -> tuple[float, float]:
        if tuple(val) != EXAMPLE2_SUPPORT:
            raise ValueError("the Example 2 density is supported on exactly [1, 2]")
        return val

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return EXAMPLE2_BREAKPOINTS

    @property
    def outer_level(self) -> float:
        return (3.0 - self.s) / 2.0

    def pdf(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        lo, hi = EXAMPLE2_BREAKPOINTS
        inner = (x >= lo) & (x < hi)
        return np.where(inner, self.s, self.outer_level)


class GaussianMixtureDensity(LabModel):
    """
    Mixture of Gaussians truncated to a compact support and renormalized there.

    Truncation keeps the data space compact; draws falling outside the support are redrawn,
    which samples exactly this truncated density.
    """

    kind: Literal["mixture"] = "mixture"
    means: list[float] = Field(min_length=1)
    stds: list[PositiveFloat] = Field(min_length=1)
    weights: list[NonNegativeFloat] = Field(min_length=1)
    support: tuple[float, float] = MIXTURE_SUPPORT

    @model_validator(mode="after")
    def check_components(self) -> "GaussianMixtureDensity":
        if not len(self.means) == len(self.stds) == len(self.weights):
            raise ValueError("means, stds and weights must have the same length")
        if abs(sum(self.weights) - 1.0) > 1e-9:
            raise ValueError("mixture weights must sum to 1")
        lo, hi = self.support
        if not lo < hi:
            raise ValueError("support must be a non-empty interval")
        return self

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return tuple(self.means)

    @cached_property
    def support_mass(self) -> float:
        """
        Probability mass of the untruncated mixture inside the support.
        """
        lo, hi = self.support
        return float(
            sum(
                weight * (norm.cdf(hi, loc=mean, scale=std) - norm.cdf(lo, loc=mean, scale=std))
                for mean, std, weight in zip(self.means, self.stds, self.weights)
            )
        )

    def pdf(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        total = np.zeros_like(x)
        for mean, std, weight in zip(self.means, self.stds, self.weights):
            total = total + weight * norm.pdf(x, loc=mean, scale=std)
        return total / self.support_mass


Density = Annotated[Union[PiecewiseExample2Density, GaussianMixtureDensity], Field(discriminator="kind")]


class KernelSpec(LabModel):
    """
    A symmetric, continuous similarity function bounded away from zero on support x support.

    The bounds l <= k(x, y) <= ||k||_inf are computed for the declared support at construction so
    downstream code can check degrees and critical regions against them.
    """

    kind: KernelKindEnum
    support: tuple[float, float]
    sigma: PositiveFloat | None = None
    value: PositiveFloat | None = None

    @model_validator(mode="after")
    def check_parameters(self) -> "KernelSpec":
        lo, hi = self.support
        if not lo < hi:
            raise ValueError("support must be a non-empty interval")
        if self.kind == KernelKindEnum.GAUSSIAN and self.sigma is None:
            raise ValueError("the Gaussian kernel needs a width sigma")
        if self.kind == KernelKindEnum.CONSTANT and self.value is None:
            raise ValueError("the constant kernel needs a value")
        if self.kind == KernelKindEnum.PRODUCT and lo <= 0.0:
            raise ValueError("the product kernel is bounded away from 0 only on a positive support")
        return self

    @computed_field
    @cached_property
    def lower_bound(self) -> float:
        lo, hi = self.support
        match self.kind:
            case KernelKindEnum.GAUSSIAN:
                return float(np.exp(-((hi - lo) ** 2) / self.sigma**2))
            case KernelKindEnum.PRODUCT:
                return lo * lo
            case _:
                return float(self.value)

    @computed_field
    @cached_property
    def upper_bound(self) -> float:
        _, hi = self.support
        match self.kind:
            case KernelKindEnum.GAUSSIAN:
                return 1.0
            case KernelKindEnum.PRODUCT:
                return hi * hi
            case _:
                return float(self.value)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        Evaluate k(x, y) with numpy broadcasting; no support check.
        """
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        match self.kind:
            case KernelKindEnum.GAUSSIAN:
                return np.exp(-((x - y) ** 2) / self.sigma**2)
            case KernelKindEnum.PRODUCT:
                return x * y
            case _:
                return np.full(np.broadcast(x, y).shape, float(self.value))

    def matrix(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """
        Kernel matrix with entries k(x_i, y_j).
        """
        return self.evaluate(np.asarray(x)[:, None], np.asarray(y)[None, :])


class SampleSet(LabModel):
    """
    n draws from a density together with the seed that reproduces them.

    Attributes:
        points (FrozenArray): Sample points X_1..X_n, all inside the support.
        seed (int): Seed of the Philox stream the points were drawn from.
        density (Density): The generating density.
        components (tuple[int, ...] | None): Mixture component of every point (mixtures only).
    """

    points: FrozenArray
    seed: int = Field(ge=0, le=2**64 - 1)
    density: Density
    components: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def points_in_support(self) -> "SampleSet":
        lo, hi = self.density.support
        if self.points.ndim != 1:
            raise ValueError("sample points must be a flat vector")
        if np.any(self.points < lo) or np.any(self.points > hi):
            raise ValueError("sample points must lie inside the support")
        if self.components is not None and len(self.components) != self.points.size:
            raise ValueError("one component label per point is required")
        return self

    @property
    def n(self) -> int:
        return int(self.points.size)


class QuadratureGrid(LabModel):
    """
    Midpoint-rule discretization of the measure P: uniform nodes, weights proportional to p(node).
    """

    nodes: FrozenArray
    weights: FrozenArray
    density: Density

    @model_validator(mode="after")
    def check_rule(self) -> "QuadratureGrid":
        lo, hi = self.density.support
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1:
            raise ValueError("nodes and weights must be vectors of the same length")
        if np.any(np.diff(self.nodes) <= 0.0):
            raise ValueError("nodes must be strictly increasing")
        if self.nodes[0] < lo or self.nodes[-1] > hi:
            raise ValueError("nodes must lie inside the support")
        if np.any(self.weights < 0.0) or abs(self.weights.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be non-negative and sum to 1")
        return self

    @property
    def size(self) -> int:
        return int(self.nodes.size)
