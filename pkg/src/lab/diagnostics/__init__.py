from src.lab.diagnostics.enums import EigenvalueStatusEnum
from src.lab.diagnostics.schemas import CriticalRegion, SpectrumRecord, SpectrumReport
from src.lab.diagnostics.services import (
    classify_eigenvalues,
    count_below_region,
    diagnose_laplacian,
    estimate_critical_region,
    ipr,
)

__all__ = [
    "EigenvalueStatusEnum",
    "CriticalRegion",
    "SpectrumRecord",
    "SpectrumReport",
    "classify_eigenvalues",
    "count_below_region",
    "diagnose_laplacian",
    "estimate_critical_region",
    "ipr",
]
