from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.optimize import bisect

from config.config import lab_settings
from src.core.utils import core_logger
from src.lab.limit_ops.enums import DegreeVariantEnum, ExtensionKindEnum, LimitKindEnum
from src.lab.limit_ops.exceptions import (
    AnalyticDegreeError,
    ContinuousSpectrumError,
    DegreeBelowBoundError,
    EssentialSpectrumError,
    TooFewProbesError,
)
from src.lab.limit_ops.schemas import (
    EXAMPLE2_DEGREE_SLOPE,
    DegreeFunction,
    EssentialRange,
    Example2Eigenfunction,
    ExtensionFunction,
    LimitEigenSystem,
    LimitOperatorDisc,
)
from src.lab.model import (
    Density,
    KernelKindEnum,
    KernelSpec,
    PiecewiseExample2Density,
    QuadratureGrid,
    SampleSet,
    check_in_support,
)
from src.lab.model.schemas import EXAMPLE2_BREAKPOINTS, EXAMPLE2_SUPPORT
from src.lab.spectral_core import LengthMismatchError, eig_sym

MIN_PROBES = 100
DEGREE_BOUND_TOL = 1e-12
ESSENTIAL_MARGIN = 1e-6
CONTINUOUS_SPECTRUM = (1.5, 3.0)
ROOT_SCAN_WINDOWS = ((-10.0, 1.49), (3.01, 13.0))
ROOT_SCAN_STEP = 1e-2
ROOT_XTOL = 1e-12
QUAD_OPTIONS = {"epsabs": 1e-14, "epsrel": 1e-12, "limit": 200}

Function = Callable[[np.ndarray], np.ndarray]


def degree_function(kernel: KernelSpec, source: Density | QuadratureGrid) -> DegreeFunction:
    """
    Build the degree function d(x) = int k(x, y) dP(y).

    Passing a density asks for the closed form, which exists for the product kernel on the
    Example 2 density only: d(x) = x E[Y] = 1.5 x. Passing a quadrature grid gives the quadrature sum.

    Raises:
        AnalyticDegreeError: If a closed form is requested for any other combination.
        DomainError: If the grid nodes fall outside the kernel support.
    """
    if isinstance(source, QuadratureGrid):
        check_in_support(kernel.support, source.nodes)
        return DegreeFunction(variant=DegreeVariantEnum.QUADRATURE, kernel=kernel, grid=source)

    if not (isinstance(source, PiecewiseExample2Density) and kernel.kind == KernelKindEnum.PRODUCT):
        raise AnalyticDegreeError()
    return DegreeFunction(variant=DegreeVariantEnum.ANALYTIC_EXAMPLE2, kernel=kernel)


def essential_range(degree: DegreeFunction, probes: int = lab_settings.PROBES) -> EssentialRange:
    """
    Estimate rg(d) by the min and max of d over ``probes`` uniform points spanning the support.
    """
    if probes < MIN_PROBES:
        raise TooFewProbesError(minimum=MIN_PROBES, n=probes)

    values = degree.evaluate(np.linspace(*degree.support, probes))
    return EssentialRange(lo=float(values.min()), hi=float(values.max()))


def build_limit(kind: LimitKindEnum, kernel: KernelSpec, grid: QuadratureGrid) -> LimitOperatorDisc:
    """
    Discretize T or U on ``grid`` as a symmetric matrix.

    Raises:
        DegreeBelowBoundError: If some grid degree falls below the kernel lower bound.
    """
    check_in_support(kernel.support, grid.nodes)
    weights = grid.weights
    matrix = kernel.matrix(grid.nodes, grid.nodes)
    degree_values = matrix @ weights

    minimum = float(degree_values.min())
    if minimum < kernel.lower_bound * (1.0 - DEGREE_BOUND_TOL):
        raise DegreeBelowBoundError(minimum=minimum, bound=kernel.lower_bound)

    root_weights = np.sqrt(weights)
    if kind == LimitKindEnum.NORMALIZED_T:
        scale = root_weights / np.sqrt(degree_values)
        matrix *= scale[:, None]
        matrix *= scale[None, :]
    else:
        matrix *= root_weights[:, None]
        matrix *= -root_weights[None, :]
        matrix[np.diag_indices_from(matrix)] += degree_values

    core_logger.info(f"Built the {kind.value} limit operator on a grid of {grid.size} nodes.")
    return LimitOperatorDisc(kind=kind, grid=grid, kernel=kernel, matrix=matrix, degree_values=degree_values)


def limit_eigs(operator: LimitOperatorDisc, r: int) -> LimitEigenSystem:
    """
    Compute the ``r`` smallest eigenvalues of U' (for T, lambda = 1 - mu over the largest mu) or U.

    Eigenfunction values at the nodes are the matrix eigenvectors divided by sqrt(w), which
    makes them unit vectors of L2(P).
    """
    if operator.kind == LimitKindEnum.NORMALIZED_T:
        system = eig_sym(np.eye(operator.size) - operator.matrix, r)
    else:
        system = eig_sym(operator.matrix, r)

    functions = system.eigenvectors / np.sqrt(operator.grid.weights)[:, None]
    return LimitEigenSystem(
        eigenvalues=system.eigenvalues,
        eigenvectors=functions,
        degenerate=system.degenerate,
        nodes=operator.grid.nodes,
    )


def empirical_degree(samples: SampleSet, kernel: KernelSpec, x: np.ndarray) -> np.ndarray:
    """
    d_n(x) = (1/n) sum_j k(x, X_j).
    """
    check_in_support(kernel.support, x)
    return kernel.matrix(np.atleast_1d(x), samples.points).mean(axis=1)


def apply_unnormalized(samples: SampleSet, kernel: KernelSpec, f: Function, x: np.ndarray) -> np.ndarray:
    """
    Evaluate (U_n f)(x) = d_n(x) f(x) - (1/n) sum_j k(x, X_j) f(X_j).
    """
    check_in_support(kernel.support, x)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    similarities = kernel.matrix(x, samples.points)
    restricted = np.asarray(f(samples.points), dtype=np.float64)
    return similarities.mean(axis=1) * f(x) - similarities @ restricted / samples.n


def apply_normalized(samples: SampleSet, kernel: KernelSpec, f: Function, x: np.ndarray) -> np.ndarray:
    """
    Evaluate (U'_n f)(x) = f(x) - (1/n) sum_j h_n(x, X_j) f(X_j), h_n(x, y) = k(x, y) / sqrt(d_n(x) d_n(y)).
    """
    check_in_support(kernel.support, x)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    similarities = kernel.matrix(x, samples.points)
    sample_degrees = kernel.matrix(samples.points, samples.points).mean(axis=1)
    normalized = similarities / np.sqrt(similarities.mean(axis=1)[:, None] * sample_degrees[None, :])
    restricted = np.asarray(f(samples.points), dtype=np.float64)
    return f(x) - normalized @ restricted / samples.n


def _check_coefficients(samples: SampleSet, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (samples.n,):
        raise LengthMismatchError(got=v.size, expected=samples.n)
    return v


def extend_normalized(samples: SampleSet, kernel: KernelSpec, v: np.ndarray, eigenvalue: float) -> ExtensionFunction:
    """
    Extend an eigenvector ``v`` of the symmetric normalized Laplacian to an eigenfunction of U'_n.

    Raises:
        EssentialSpectrumError: If |1 - eigenvalue| < 1e-6.
    """
    v = _check_coefficients(samples, v)
    if abs(1.0 - eigenvalue) < ESSENTIAL_MARGIN:
        raise EssentialSpectrumError(value=eigenvalue, detail="{1}")
    return ExtensionFunction(
        kind=ExtensionKindEnum.NORMALIZED, sample=samples, kernel=kernel, coefficients=v, eigenvalue=eigenvalue
    )


def extend_unnormalized(
    samples: SampleSet,
    kernel: KernelSpec,
    v: np.ndarray,
    eigenvalue: float,
    probes: int = lab_settings.PROBES,
) -> ExtensionFunction:
    """
    Extend an eigenvector ``v`` of (D - K) / n to an eigenfunction of U_n.

    The range of d_n is estimated over ``probes`` uniform points together with the sample points.

    Raises:
        EssentialSpectrumError: If the eigenvalue is within 1e-6 of the range of d_n.
    """
    v = _check_coefficients(samples, v)
    grid = np.concatenate([np.linspace(*kernel.support, probes), samples.points])
    degree_values = empirical_degree(samples, kernel, grid)
    lo, hi = float(degree_values.min()), float(degree_values.max())
    if lo - ESSENTIAL_MARGIN <= eigenvalue <= hi + ESSENTIAL_MARGIN:
        raise EssentialSpectrumError(value=eigenvalue, detail=f"[{lo:.6g}, {hi:.6g}] of d_n")
    return ExtensionFunction(
        kind=ExtensionKindEnum.UNNORMALIZED, sample=samples, kernel=kernel, coefficients=v, eigenvalue=eigenvalue
    )


def extension_residual(extension: ExtensionFunction, probes: np.ndarray) -> float:
    """
    sup over ``probes`` of |U_n f - lambda f| (or |U'_n f - lambda f| for normalized extensions).
    """
    apply = apply_normalized if extension.kind == ExtensionKindEnum.NORMALIZED else apply_unnormalized
    probes = np.asarray(probes, dtype=np.float64)
    image = apply(extension.sample, extension.kernel, extension.evaluate, probes)
    return float(np.abs(image - extension.eigenvalue * extension.evaluate(probes)).max())


def _example2_density(s: float) -> PiecewiseExample2Density:
    return PiecewiseExample2Density(s=s)


def _example2_integral(density: PiecewiseExample2Density, integrand: Function) -> float:
    """
    int integrand(y) p(y) dy, one quadrature per piece on which p is constant.
    """
    lo, hi = EXAMPLE2_SUPPORT
    cuts = [lo, *EXAMPLE2_BREAKPOINTS, hi]
    levels = [density.outer_level, density.s, density.outer_level]
    return float(
        sum(
            level * quad(integrand, left, right, **QUAD_OPTIONS)[0]
            for level, left, right in zip(levels, cuts[:-1], cuts[1:])
        )
    )


def _g(density: PiecewiseExample2Density, eigenvalue: float) -> float:
    _check_outside_continuous_spectrum(eigenvalue)
    return _example2_integral(density, lambda y: y * y / (EXAMPLE2_DEGREE_SLOPE * y - eigenvalue))


def _check_outside_continuous_spectrum(eigenvalue: float) -> None:
    lo, hi = CONTINUOUS_SPECTRUM
    if lo <= eigenvalue <= hi:
        raise ContinuousSpectrumError(value=eigenvalue)


def example2_g(eigenvalue: float, s: float) -> float:
    """
    g(lambda) = int y^2 / (1.5 y - lambda) p(y) dy; lambda is an eigenvalue of U iff g(lambda) = 1.

    Raises:
        ContinuousSpectrumError: If lambda lies in [1.5, 3].
    """
    return _g(_example2_density(s), eigenvalue)


def example2_roots(s: float) -> list[float]:
    """
    All solutions of g(lambda) = 1 on the scan windows below and above the continuous spectrum.

    Every sign change of g - 1 on a 1e-2 scan is refined by bisection to 1e-12; nodes where
    g - 1 vanishes exactly are roots too.
    """
    density = _example2_density(s)
    roots: list[float] = []

    for lo, hi in ROOT_SCAN_WINDOWS:
        nodes = np.linspace(lo, hi, int(round((hi - lo) / ROOT_SCAN_STEP)) + 1)
        excess = np.array([_g(density, node) - 1.0 for node in nodes])

        for index, value in enumerate(excess):
            if value == 0.0:
                roots.append(float(nodes[index]))
            elif index + 1 < nodes.size and value * excess[index + 1] < 0.0:
                root = bisect(lambda t: _g(density, t) - 1.0, nodes[index], nodes[index + 1], xtol=ROOT_XTOL)
                roots.append(float(root))

    unique: list[float] = []
    for root in sorted(roots):
        if not unique or root - unique[-1] > 1e-9:
            unique.append(root)

    core_logger.info(f"Example 2 eigencondition with s={s}: roots {unique}.")
    return unique


def example2_eigenfunction(eigenvalue: float, s: float) -> Example2Eigenfunction:
    """
    f(x) = beta x / (1.5 x - lambda) with beta chosen so that ||f||_{L2(P)} = 1.
    """
    _check_outside_continuous_spectrum(eigenvalue)
    density = _example2_density(s)
    squared_norm = _example2_integral(density, lambda y: (y / (EXAMPLE2_DEGREE_SLOPE * y - eigenvalue)) ** 2)
    return Example2Eigenfunction(eigenvalue=eigenvalue, s=s, beta=1.0 / np.sqrt(squared_norm))


def example2_residual(eigenfunction: Example2Eigenfunction, probes: int = lab_settings.PROBES) -> float:
    """
    sup over probes of |d(x) f(x) - x int y f(y) p(y) dy - lambda f(x)|; zero iff f solves the eigen equation.
    """
    density = _example2_density(eigenfunction.s)
    moment = _example2_integral(density, lambda y: y * eigenfunction(y))
    x = np.linspace(*EXAMPLE2_SUPPORT, probes)
    f = eigenfunction(x)
    return float(np.abs(EXAMPLE2_DEGREE_SLOPE * x * f - x * moment - eigenfunction.eigenvalue * f).max())
