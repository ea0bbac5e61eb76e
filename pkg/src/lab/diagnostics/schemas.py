from pydantic import Field, NonNegativeFloat, model_validator

from src.core.utils import LabModel
from src.lab.diagnostics.enums import EigenvalueStatusEnum
from src.lab.spectral_core import LaplacianKindEnum


class CriticalRegion(LabModel):
    """
    Eigenvalue range whose eigenvectors are unreliable.

    For (1/n) L_n it is [min_i d_i / n, max_i d_i / n], the sample estimate of the range of the degree
    function. For the normalized Laplacians it is the single essential value 1.

    Attributes:
        lo (float): Smallest scaled degree.
        hi (float): Largest scaled degree.
        margin (float): Relative margin; eigenvalues within margin * (hi - lo) of the region are marginal.
        laplacian (LaplacianKindEnum): The Laplacian whose spectrum the region applies to.
    """

    lo: float
    hi: float
    margin: NonNegativeFloat
    laplacian: LaplacianKindEnum = LaplacianKindEnum.UNNORM_SCALED

    @model_validator(mode="after")
    def ordered(self) -> "CriticalRegion":
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        return self

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def status(self, eigenvalue: float) -> EigenvalueStatusEnum:
        if self.lo <= eigenvalue <= self.hi:
            return EigenvalueStatusEnum.INSIDE
        band = self.margin * self.width
        if self.lo - band <= eigenvalue <= self.hi + band:
            return EigenvalueStatusEnum.MARGINAL
        return EigenvalueStatusEnum.SAFE


class SpectrumRecord(LabModel):
    index: int = Field(ge=1)
    eigenvalue: float
    status: EigenvalueStatusEnum
    ipr: float


class SpectrumReport(LabModel):
    """
    Status and localization score of every computed eigenvalue of a sample Laplacian.
    """

    region: CriticalRegion
    records: tuple[SpectrumRecord, ...]
