import numpy as np
import scipy.linalg

from src.core.utils import core_logger
from src.lab.model import KernelSpec, SampleSet
from src.lab.model.exceptions import TooFewPointsError
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

SYMMETRY_TOL = 1e-12
RESIDUAL_TOL = 1e-8
DEGENERACY_TOL = 1e-8
UNIT_NORM_TOL = 1e-8
QUADRATIC_FORM_TOL = 1e-9
QUADRATIC_FORM_FLOOR = float(np.finfo(np.float64).tiny)


def build_similarity(samples: SampleSet, kernel: KernelSpec) -> SimilarityMatrix:
    """
    Build K = (k(X_i, X_j)).

    Only the upper triangle is evaluated into the result; the lower triangle mirrors it so that
    K is exactly symmetric whatever rounding the kernel does.
    """
    if samples.n < 2:
        raise TooFewPointsError(minimum=2, n=samples.n)

    full = kernel.matrix(samples.points, samples.points)
    entries = np.triu(full) + np.triu(full, 1).T
    return SimilarityMatrix(entries=entries, kernel=kernel)


def degrees(similarity: SimilarityMatrix) -> DegreeVector:
    return DegreeVector(values=similarity.entries.sum(axis=1), kernel=similarity.kernel)


def build_laplacian(similarity: SimilarityMatrix, kind: LaplacianKindEnum) -> LaplacianMatrix:
    """
    Build one of the graph Laplacians of ``similarity``.

    Args:
        similarity (SimilarityMatrix): The similarity matrix K.
        kind (LaplacianKindEnum): Which Laplacian to build.

    Returns:
        LaplacianMatrix: The Laplacian together with the degrees it was built from.

    Raises:
        ZeroDegreeError: If some degree d_i is not positive.
    """
    degree = degrees(similarity)
    d = degree.values
    if np.any(d <= 0.0):
        raise ZeroDegreeError(minimum=float(d.min()))

    n = similarity.n
    k = similarity.entries
    match kind:
        case LaplacianKindEnum.UNNORM_SCALED:
            entries = (np.diag(d) - k) / n
        case LaplacianKindEnum.SYM_NORM:
            inv_sqrt = 1.0 / np.sqrt(d)
            normalized = inv_sqrt[:, None] * k * inv_sqrt[None, :]
            entries = np.eye(n) - 0.5 * (normalized + normalized.T)
        case LaplacianKindEnum.RW_NORM:
            entries = np.eye(n) - k / d[:, None]

    return LaplacianMatrix(kind=kind, entries=entries, degrees=degree)


def quadratic_form_tolerance(similarity: SimilarityMatrix, f: np.ndarray) -> float:
    """
    Rounding budget 1e-9 n^2 ||k||_inf ||f||_inf^2 of :func:`quadratic_form`.
    """
    sup = float(np.abs(f).max()) if f.size else 0.0
    return QUADRATIC_FORM_TOL * similarity.n**2 * similarity.upper_bound * max(sup**2, QUADRATIC_FORM_FLOOR)


def quadratic_form(similarity: SimilarityMatrix, f: np.ndarray) -> float:
    """
    Compute f^T (D - K) f and check it against 1/2 sum_ij k_ij (f_i - f_j)^2.

    Raises:
        LengthMismatchError: If ``f`` does not have one entry per node.
        QuadraticFormError: If the two expressions differ by more than the rounding budget.
    """
    f = np.asarray(f, dtype=np.float64)
    if f.shape != (similarity.n,):
        raise LengthMismatchError(got=f.size, expected=similarity.n)

    k = similarity.entries
    d = k.sum(axis=1)
    lhs = float(f @ (d * f) - f @ k @ f)
    rhs = float(0.5 * np.sum(k * (f[:, None] - f[None, :]) ** 2))

    if abs(lhs - rhs) > quadratic_form_tolerance(similarity, f):
        raise QuadraticFormError(lhs=lhs, rhs=rhs)
    return lhs


def _degeneracy_flags(values: np.ndarray, r: int) -> tuple[bool, ...]:
    gaps = np.diff(values)
    flags = []
    for index in range(r):
        below = index > 0 and gaps[index - 1] < DEGENERACY_TOL
        above = index < gaps.size and gaps[index] < DEGENERACY_TOL
        flags.append(bool(below or above))
    return tuple(flags)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """
    Flip each column so its entry of largest magnitude is positive.
    """
    pivots = vectors[np.argmax(np.abs(vectors), axis=0), np.arange(vectors.shape[1])]
    return vectors * np.where(pivots < 0.0, -1.0, 1.0)


def eig_sym(matrix: np.ndarray, r: int) -> EigenSystem:
    """
    Compute the ``r`` smallest eigenpairs of a symmetric matrix.

    One extra eigenvalue is computed when available so that the last requested pair can be
    flagged as degenerate too.

    Raises:
        NotSymmetricError: If the matrix is not symmetric within 1e-12 (relative to its largest entry).
        EigenCountError: If ``r`` is not in 1..n.
        EigenConvergenceError: If LAPACK fails to converge.
        EigenResidualError: If some ||A v - lambda v|| exceeds 1e-8 ||A||_F.
    """
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError(asym=float("inf"))

    n = a.shape[0]
    asym = float(np.abs(a - a.T).max())
    if asym > SYMMETRY_TOL * max(1.0, float(np.abs(a).max())):
        raise NotSymmetricError(asym=asym)
    if not 1 <= r <= n:
        raise EigenCountError(r=r, n=n)

    upper = min(r + 1, n)
    try:
        values, vectors = scipy.linalg.eigh(a, subset_by_index=[0, upper - 1])
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        core_logger.critical(f"Symmetric eigensolver failed for an {n}x{n} matrix: {exc}")
        raise EigenConvergenceError(detail=str(exc))

    flags = _degeneracy_flags(values, r)
    values = values[:r]
    vectors = _fix_signs(vectors[:, :r])

    bound = RESIDUAL_TOL * max(float(np.linalg.norm(a)), np.finfo(float).tiny)
    residuals = np.linalg.norm(a @ vectors - vectors * values, axis=0)
    worst = int(np.argmax(residuals))
    if residuals[worst] > bound:
        raise EigenResidualError(index=worst + 1, residual=float(residuals[worst]), bound=bound)

    return EigenSystem(eigenvalues=values, eigenvectors=vectors, degenerate=flags)


def eig_generalized(similarity: SimilarityMatrix, r: int) -> EigenSystem:
    """
    Solve (D - K) v = lambda D v for the ``r`` smallest eigenpairs.

    The eigenvalues coincide with those of the normalized Laplacians; the returned eigenvectors
    are the random walk eigenvectors rescaled to unit Euclidean norm.
    """
    n = similarity.n
    if not 1 <= r <= n:
        raise EigenCountError(r=r, n=n)

    d = similarity.entries.sum(axis=1)
    if np.any(d <= 0.0):
        raise ZeroDegreeError(minimum=float(d.min()))

    upper = min(r + 1, n)
    try:
        values, vectors = scipy.linalg.eigh(
            np.diag(d) - similarity.entries, np.diag(d), subset_by_index=[0, upper - 1]
        )
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        core_logger.critical(f"Generalized eigensolver failed for an {n}x{n} pencil: {exc}")
        raise EigenConvergenceError(detail=str(exc))

    flags = _degeneracy_flags(values, r)
    vectors = vectors[:, :r] / np.linalg.norm(vectors[:, :r], axis=0)
    return EigenSystem(eigenvalues=values[:r], eigenvectors=_fix_signs(vectors), degenerate=flags)


def rw_from_sym(w: np.ndarray, degree: DegreeVector) -> np.ndarray:
    """
    Map an eigenvector w of I - D^{-1/2} K D^{-1/2} to the unit eigenvector D^{-1/2} w of I - D^{-1} K.
    """
    w = np.asarray(w, dtype=np.float64)
    if w.shape != (degree.n,):
        raise LengthMismatchError(got=w.size, expected=degree.n)
    v = w / np.sqrt(degree.values)
    return v / np.linalg.norm(v)


def check_unit(v: np.ndarray) -> np.ndarray:
    """
    Return ``v`` as a float vector, raising :class:`NotUnitVectorError` unless ||v|| = 1 within 1e-8.
    """
    v = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise NotUnitVectorError(norm=norm)
    return v


def align_sign(v: np.ndarray, reference: np.ndarray) -> tuple[int, np.ndarray]:
    """
    Choose a in {+1, -1} with a <v, reference> >= 0.

    Returns:
        tuple[int, np.ndarray]: The sign a and the aligned vector a * v.
    """
    v = check_unit(v)
    reference = check_unit(reference)
    if v.shape != reference.shape:
        raise LengthMismatchError(got=v.size, expected=reference.size)

    sign = 1 if float(v @ reference) >= 0.0 else -1
    return sign, sign * v


def threshold_cluster(v: np.ndarray, threshold: float = 0.0) -> ClusterAssignment:
    v = np.asarray(v, dtype=np.float64)
    return ClusterAssignment(labels=tuple(int(label) for label in v >= threshold), threshold=threshold)


def bicluster(
    samples: SampleSet, kernel: KernelSpec, kind: ClusteringKindEnum, threshold: float = 0.0
) -> ClusterAssignment:
    """
    Bi-partition a sample by thresholding the second eigenvector of the chosen Laplacian.

    Normalized clustering thresholds the random walk eigenvector D^{-1/2} w, not w itself.
    """
    similarity = build_similarity(samples, kernel)
    laplacian = build_laplacian(similarity, kind.laplacian)
    system = eig_sym(laplacian.entries, 2)

    v = system.vector(1)
    if kind is ClusteringKindEnum.NORMALIZED:
        v = rw_from_sym(v, laplacian.degrees)
    return threshold_cluster(v, threshold)
