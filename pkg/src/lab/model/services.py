import numpy as np
from scipy.integrate import quad

from src.core.utils import core_logger
from src.core.utils.rng import make_rng
from src.lab.model.exceptions import DomainError, TooFewNodesError, TooFewPointsError
from src.lab.model.schemas import (
    EXAMPLE2_BREAKPOINTS,
    Density,
    GaussianMixtureDensity,
    KernelSpec,
    PiecewiseExample2Density,
    QuadratureGrid,
    SampleSet,
)

MIN_SAMPLE_SIZE = 2
MIN_GRID_NODES = 16


def check_in_support(support: tuple[float, float], x: np.ndarray | float) -> None:
    """
    Raise :class:`DomainError` if any of the given points lies outside ``support``.
    """
    lo, hi = support
    values = np.atleast_1d(np.asarray(x, dtype=np.float64))
    outside = values[(values < lo) | (values > hi) | np.isnan(values)]
    if outside.size:
        raise DomainError(x=float(outside[0]), lo=lo, hi=hi)


def density_pdf(density: Density, x: float) -> float:
    """
    Evaluate the probability density p(x) at a point of its support.

    Raises:
        DomainError: If ``x`` lies outside the support.
    """
    check_in_support(density.support, x)
    return float(density.pdf(np.asarray(x, dtype=np.float64)))


def density_mass(density: Density) -> float:
    """
    Integrate the pdf over its support with adaptive quadrature, splitting at the breakpoints.
    """
    lo, hi = density.support
    cuts = [lo, *[point for point in density.breakpoints if lo < point < hi], hi]
    return float(
        sum(
            quad(lambda t: float(density.pdf(t)), left, right, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
            for left, right in zip(cuts[:-1], cuts[1:])
        )
    )


def _sample_example2(density: PiecewiseExample2Density, n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Inverse transform sampling of the piecewise constant density.
    """
    lo, hi = EXAMPLE2_BREAKPOINTS
    outer = density.outer_level
    left_mass = outer * (lo - 1.0)
    inner_mass = density.s * (hi - lo)

    u = rng.random(n)
    points = np.where(
        u < left_mass,
        1.0 + u / outer,
        np.where(
            u < left_mass + inner_mass,
            lo + (u - left_mass) / density.s,
            hi + (u - left_mass - inner_mass) / outer,
        ),
    )
    return np.clip(points, 1.0, 2.0)


def _sample_mixture(
    density: GaussianMixtureDensity, n: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """
    Draw component labels and Gaussian values; redraw both for every point outside the support.
    """
    lo, hi = density.support
    means = np.asarray(density.means)
    stds = np.asarray(density.stds)
    weights = np.asarray(density.weights)

    components = rng.choice(means.size, size=n, p=weights)
    points = rng.normal(means[components], stds[components])
    outside = (points < lo) | (points > hi)
    redraws = 0
    while outside.any():
        count = int(outside.sum())
        redraws += count
        components[outside] = rng.choice(means.size, size=count, p=weights)
        points[outside] = rng.normal(means[components[outside]], stds[components[outside]])
        outside = (points < lo) | (points > hi)

    if redraws:
        core_logger.info(f"Redrew {redraws} mixture draws that fell outside the support [{lo}, {hi}].")
    return points, components


def sample(density: Density, n: int, seed: int) -> SampleSet:
    """
    Draw ``n`` points from ``density``; a pure function of (density, n, seed).

    Raises:
        TooFewPointsError: If ``n < 2``.
    """
    if n < MIN_SAMPLE_SIZE:
        raise TooFewPointsError(minimum=MIN_SAMPLE_SIZE, n=n)

    rng = make_rng(seed)
    if isinstance(density, PiecewiseExample2Density):
        return SampleSet(points=_sample_example2(density, n, rng), seed=seed, density=density)

    points, components = _sample_mixture(density, n, rng)
    return SampleSet(
        points=points,
        seed=seed,
        density=density,
        components=tuple(int(component) for component in components),
    )


def kernel_eval(kernel: KernelSpec, x: float, y: float) -> float:
    """
    Evaluate k(x, y) for two points of the kernel's support.
    """
    check_in_support(kernel.support, x)
    check_in_support(kernel.support, y)
    return float(kernel.evaluate(x, y))


def build_grid(density: Density, size: int) -> QuadratureGrid:
    """
    Build the midpoint-rule grid: ``size`` uniform cells, nodes at cell centres, weights
    proportional to p(node) and normalized to sum 1.

    Raises:
        TooFewNodesError: If ``size < 16``.
    """
    if size < MIN_GRID_NODES:
        raise TooFewNodesError(minimum=MIN_GRID_NODES, n=size)

    lo, hi = density.support
    step = (hi - lo) / size
    nodes = lo + (np.arange(size) + 0.5) * step
    weights = density.pdf(nodes)
    weights = weights / weights.sum()
    return QuadratureGrid(nodes=nodes, weights=weights, density=density)
