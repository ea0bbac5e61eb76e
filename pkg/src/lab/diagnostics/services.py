import numpy as np

from config.config import lab_settings
from src.core.exceptions import ArgumentError
from src.lab.diagnostics.enums import EigenvalueStatusEnum
from src.lab.diagnostics.schemas import CriticalRegion, SpectrumRecord, SpectrumReport
from src.lab.spectral_core import (
    DegreeVector,
    EigenSystem,
    LaplacianKindEnum,
    LaplacianMatrix,
    check_unit,
    rw_from_sym,
)

TRIVIAL_TOL = 1e-8
NORMALIZED_ESSENTIAL_VALUE = 1.0


def estimate_critical_region(
    degree: DegreeVector,
    n: int,
    margin: float = lab_settings.MARGIN,
    laplacian: LaplacianKindEnum = LaplacianKindEnum.UNNORM_SCALED,
) -> CriticalRegion:
    """
    Estimate the critical region of a sample Laplacian.

    For (1/n) L_n this is [min_i d_i / n, max_i d_i / n]. The normalized Laplacians only have the
    essential value 1, so their region is {1} whatever the degrees.

    Raises:
        ArgumentError: If ``margin`` is negative.
    """
    if margin < 0.0:
        raise ArgumentError(f"The margin must be non-negative, got {margin}.")
    if laplacian != LaplacianKindEnum.UNNORM_SCALED:
        return CriticalRegion(
            lo=NORMALIZED_ESSENTIAL_VALUE, hi=NORMALIZED_ESSENTIAL_VALUE, margin=margin, laplacian=laplacian
        )
    scaled = degree.values / n
    return CriticalRegion(lo=float(scaled.min()), hi=float(scaled.max()), margin=margin)


def ipr(v: np.ndarray) -> float:
    """
    Inverse participation ratio sum_i v_i^4 of a unit vector: 1 for a Dirac vector, 1/n for a flat one.
    """
    v = check_unit(v)
    return float(np.sum(v**4))


def classify_eigenvalues(
    eigs: EigenSystem, region: CriticalRegion, vectors: np.ndarray | None = None
) -> SpectrumReport:
    """
    Classify every eigenvalue against ``region`` and score its eigenvector.

    The trivial eigenvalue 0 is always safe. ``vectors`` replaces the eigenvectors of ``eigs`` for
    the IPR, one unit column per eigenvalue.

    Raises:
        ArgumentError: If ``vectors`` does not hold one column per eigenvalue.
    """
    vectors = eigs.eigenvectors if vectors is None else np.asarray(vectors, dtype=np.float64)
    if vectors.ndim != 2 or vectors.shape[1] != eigs.r:
        raise ArgumentError(f"Expected {eigs.r} vectors to score, got shape {vectors.shape}.")

    records = []
    for index, eigenvalue in enumerate(eigs.eigenvalues):
        if index == 0 and abs(eigenvalue) < TRIVIAL_TOL:
            status = EigenvalueStatusEnum.SAFE
        else:
            status = region.status(float(eigenvalue))
        records.append(
            SpectrumRecord(index=index + 1, eigenvalue=float(eigenvalue), status=status, ipr=ipr(vectors[:, index]))
        )
    return SpectrumReport(region=region, records=tuple(records))


def diagnose_laplacian(
    laplacian: LaplacianMatrix, eigs: EigenSystem, margin: float = lab_settings.MARGIN
) -> tuple[SpectrumReport, np.ndarray]:
    """
    Report on the spectrum of a sample Laplacian.

    Eigenvectors of I - D^{-1/2} K D^{-1/2} are mapped to random walk coordinates first, and the IPR
    is taken of those. The returned vectors are the ones the report scores.
    """
    region = estimate_critical_region(laplacian.degrees, laplacian.n, margin, laplacian.kind)
    vectors = eigs.eigenvectors
    if laplacian.kind == LaplacianKindEnum.SYM_NORM:
        vectors = np.column_stack([rw_from_sym(column, laplacian.degrees) for column in vectors.T])
    return classify_eigenvalues(eigs, region, vectors), vectors


def count_below_region(report: SpectrumReport) -> int:
    """
    Number of eigenvalues strictly below the critical region and its margin, the trivial one included.
    """
    return sum(
        1
        for record in report.records
        if record.status == EigenvalueStatusEnum.SAFE and record.eigenvalue < report.region.lo
    )
