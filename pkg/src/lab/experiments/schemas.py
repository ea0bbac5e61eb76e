import math

import numpy as np
from pydantic import Field, PositiveInt, model_validator

from config.config import lab_settings
from src.core.utils import FrozenArray, LabModel
from src.lab.diagnostics import CriticalRegion, SpectrumReport
from src.lab.experiments.enums import RateFieldEnum, RegimeEnum
from src.lab.limit_ops import EssentialRange, LimitEigenSystem
from src.lab.model import Density, KernelSpec
from src.lab.spectral_core import ClusteringKindEnum

NAN = float("nan")


class Scenario(LabModel):
    """
    A density, a kernel and a clustering flavour: everything a convergence study needs.

    Attributes:
        id (str): Short identifier written into CSVs and manifests.
        density (Density): The data-generating density.
        kernel (KernelSpec): The similarity kernel; its support must equal the density support.
        kind (ClusteringKindEnum): Normalized or unnormalized clustering.
        grid_n (int): Size of the quadrature grid the limit operator is discretized on.
        compare_vectors (bool): Compare sample eigenvectors against the limit eigenfunction.
            Turn off for limits whose second eigenvalue is not simple (e.g. constant kernels).
    """

    id: str
    density: Density
    kernel: KernelSpec
    kind: ClusteringKindEnum
    grid_n: int = Field(default=lab_settings.GRID_N, ge=16)
    compare_vectors: bool = True

    @model_validator(mode="after")
    def kernel_covers_density(self) -> "Scenario":
        if tuple(self.kernel.support) != tuple(self.density.support):
            raise ValueError("kernel and density must share the same support")
        return self


class LimitReference(LabModel):
    """
    The grid-limit side of a scenario: lambda_2, its eigenfunction and the range of d.
    """

    eigenvalue: float
    degenerate: bool
    inside_essential: bool
    system: LimitEigenSystem
    essential: EssentialRange
    grid_weights: FrozenArray

    def function(self, x: np.ndarray) -> np.ndarray:
        return self.system.function(1, x)


class ConvergenceRecord(LabModel):
    n: PositiveInt
    rep: int = Field(ge=0)
    seed: int
    lambda2_sample: float = NAN
    lambda2_limit: float = NAN
    vec_sup_err: float = NAN
    sign: int = Field(default=0, ge=-1, le=1)
    sup_dev: float = NAN
    ipr: float = NAN
    regime: RegimeEnum = RegimeEnum.CONSISTENT

    @property
    def lambda_error(self) -> float:
        return abs(self.lambda2_sample - self.lambda2_limit)

    def value(self, field: RateFieldEnum) -> float:
        match field:
            case RateFieldEnum.LAMBDA_ERROR:
                return self.lambda_error
            case RateFieldEnum.VEC_SUP_ERR:
                return self.vec_sup_err
            case _:
                return self.sup_dev


class ConvergenceSeries(LabModel):
    """
    One row per (n, rep), sorted by (n, rep), plus the scenario and master seed that produced them.
    """

    scenario: Scenario
    seed: int
    n_list: tuple[int, ...]
    reps: PositiveInt
    records: tuple[ConvergenceRecord, ...]

    def values(self, field: RateFieldEnum, n: int) -> np.ndarray:
        return np.array([record.value(field) for record in self.records if record.n == n])

    def medians(self, field: RateFieldEnum) -> dict[int, float]:
        """
        Median of ``field`` over repetitions for every n; NaN entries are ignored.
        """
        medians = {}
        for n in self.n_list:
            values = self.values(field, n)
            values = values[~np.isnan(values)]
            medians[n] = float(np.median(values)) if values.size else NAN
        return medians


class RateFit(LabModel):
    """
    Least squares line through (log n, log median error).
    """

    field: RateFieldEnum
    slope: float
    intercept: float
    r2: float
    points: int


class ClassDeviationRatios(LabModel):
    """
    Median ratio of the eigenvector sup error to the function class deviation, per n.
    """

    n_list: tuple[int, ...]
    ratios: tuple[float, ...]

    @property
    def growth(self) -> float:
        """
        max_n ratio(n) / ratio(smallest n).
        """
        first = self.ratios[0]
        return max(self.ratios) / first if first > 0.0 else math.inf


class FigurePanel(LabModel):
    """
    One panel of the figure study: a kernel width and a clustering flavour on the shared sample.

    Attributes:
        sigma (float): Gaussian kernel width.
        kind (ClusteringKindEnum): Which Laplacian the eigenpairs come from.
        eigenvalues (FrozenArray): The first 10 eigenvalues, ascending.
        eigenvectors (FrozenArray): n x 5 matrix of eigenvectors 1-5 (random walk coordinates for
            normalized panels).
        min_degree (float): min_i d_i / n, the dashed marker of unnormalized panels.
        region (CriticalRegion): The critical region of the panel's Laplacian.
        report (SpectrumReport): Status and IPR of every eigenvalue against the region.
    """

    sigma: float
    kind: ClusteringKindEnum
    eigenvalues: FrozenArray
    eigenvectors: FrozenArray
    min_degree: float
    region: CriticalRegion
    report: SpectrumReport


class FigureData(LabModel):
    seed: int
    n: int
    points: FrozenArray
    components: tuple[int, ...]
    panels: tuple[FigurePanel, ...]

    def panel(self, sigma: float, kind: ClusteringKindEnum) -> FigurePanel:
        for panel in self.panels:
            if panel.sigma == sigma and panel.kind == kind:
                return panel
        raise KeyError(f"no panel for sigma={sigma} and kind={kind.value}")
