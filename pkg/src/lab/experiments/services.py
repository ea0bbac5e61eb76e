import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from config.config import lab_settings
from src.core.utils import experiment_logger
from src.core.utils.rng import derive_seed
from src.lab.diagnostics import diagnose_laplacian, ipr
from src.lab.experiments.enums import RateFieldEnum, RegimeEnum
from src.lab.experiments.exceptions import DegenerateEigenvalueError, InvalidNListError, NotEnoughRatePointsError
from src.lab.experiments.schemas import (
    NAN,
    ClassDeviationRatios,
    ConvergenceRecord,
    ConvergenceSeries,
    FigureData,
    FigurePanel,
    LimitReference,
    RateFit,
    Scenario,
)
from src.lab.limit_ops import (
    DegreeFunction,
    LimitKindEnum,
    build_limit,
    degree_function,
    essential_range,
    limit_eigs,
)
from src.lab.model import (
    GaussianMixtureDensity,
    KernelKindEnum,
    KernelSpec,
    PiecewiseExample2Density,
    SampleSet,
    build_grid,
    sample,
)
from src.lab.model.schemas import EXAMPLE2_SUPPORT, MIXTURE_SUPPORT
from src.lab.spectral_core import (
    ClusteringKindEnum,
    align_sign,
    build_laplacian,
    build_similarity,
    eig_sym,
)

MIN_N_VALUES = 4
MIN_RATE_POINTS = 4
ESSENTIAL_MARGIN = 1e-6
PAIR_PROBES = 400
FIGURE_SIGMAS = (1.0, 2.0, 5.0, 50.0)
FIGURE_SAMPLE_SIZE = 200
FIGURE_EIGENVALUES = 10
FIGURE_EIGENVECTORS = 5


def figure_mixture() -> GaussianMixtureDensity:
    """
    Four Gaussians with means 2, 4, 6, 8, common standard deviation 0.25 and equal weights.
    """
    return GaussianMixtureDensity(
        means=[2.0, 4.0, 6.0, 8.0], stds=[0.25] * 4, weights=[0.25] * 4, support=MIXTURE_SUPPORT
    )


def example2_scenario(
    kind: ClusteringKindEnum,
    kernel_kind: KernelKindEnum = KernelKindEnum.PRODUCT,
    s: float = 0.3,
    sigma: float | None = None,
    value: float | None = None,
    grid_n: int = lab_settings.GRID_N,
    compare_vectors: bool = True,
) -> Scenario:
    kernel = KernelSpec(kind=kernel_kind, support=EXAMPLE2_SUPPORT, sigma=sigma, value=value)
    return Scenario(
        id=f"example2-{kernel_kind.value}-{kind.value}",
        density=PiecewiseExample2Density(s=s),
        kernel=kernel,
        kind=kind,
        grid_n=grid_n,
        compare_vectors=compare_vectors,
    )


def mixture_scenario(
    kind: ClusteringKindEnum,
    sigma: float,
    grid_n: int = lab_settings.GRID_N,
    compare_vectors: bool = True,
) -> Scenario:
    kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=sigma, support=MIXTURE_SUPPORT)
    return Scenario(
        id=f"mixture-gaussian{sigma:g}-{kind.value}",
        density=figure_mixture(),
        kernel=kernel,
        kind=kind,
        grid_n=grid_n,
        compare_vectors=compare_vectors,
    )


def constant_scenario(kind: ClusteringKindEnum, value: float = 0.5, grid_n: int = lab_settings.GRID_N) -> Scenario:
    """
    The constant kernel on the Example 2 density. Its limit lambda_2 is not simple, so only
    eigenvalues are compared.
    """
    return example2_scenario(
        kind, kernel_kind=KernelKindEnum.CONSTANT, value=value, grid_n=grid_n, compare_vectors=False
    )


def true_degree(scenario: Scenario) -> DegreeFunction:
    """
    The degree function d of a scenario: closed form when one exists, quadrature otherwise.
    """
    if isinstance(scenario.density, PiecewiseExample2Density) and scenario.kernel.kind == KernelKindEnum.PRODUCT:
        return degree_function(scenario.kernel, scenario.density)
    return degree_function(scenario.kernel, build_grid(scenario.density, scenario.grid_n))


def build_reference(scenario: Scenario) -> LimitReference:
    """
    Discretize the scenario's limit operator and extract lambda_2 with its eigenfunction.
    """
    grid = build_grid(scenario.density, scenario.grid_n)
    kind = LimitKindEnum(scenario.kind.value)
    system = limit_eigs(build_limit(kind, scenario.kernel, grid), 3)
    essential = essential_range(true_degree(scenario))

    eigenvalue = float(system.eigenvalues[1])
    inside = kind == LimitKindEnum.UNNORMALIZED_U and essential.contains(eigenvalue, ESSENTIAL_MARGIN)
    experiment_logger.info(
        f"Limit reference for {scenario.id} on {grid.size} nodes: lambda_2={eigenvalue!r}, "
        f"degenerate={system.degenerate[1]}, inside rg(d)={inside}."
    )
    return LimitReference(
        eigenvalue=eigenvalue,
        degenerate=system.degenerate[1],
        inside_essential=inside,
        system=system,
        essential=essential,
        grid_weights=grid.weights,
    )


def _compares_vectors(scenario: Scenario, reference: LimitReference) -> bool:
    return scenario.compare_vectors and not reference.inside_essential


def _check_n_list(n_list: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    n_list = tuple(int(n) for n in n_list)
    if len(n_list) < MIN_N_VALUES or any(a >= b for a, b in zip(n_list[:-1], n_list[1:])) or n_list[0] < 2:
        raise InvalidNListError(minimum=MIN_N_VALUES)
    return n_list


def _sample_eigenpair(scenario: Scenario, samples: SampleSet) -> tuple[float, np.ndarray, np.ndarray]:
    """
    lambda_2 and its eigenvector (symmetric coordinates for normalized scenarios) plus the scaled degrees.
    """
    laplacian = build_laplacian(build_similarity(samples, scenario.kernel), scenario.kind.laplacian)
    system = eig_sym(laplacian.entries, 2)
    return float(system.eigenvalues[1]), system.vector(1), laplacian.degrees.values / samples.n


def _convergence_row(
    scenario: Scenario, reference: LimitReference, n: int, rep: int, seed: int
) -> ConvergenceRecord:
    samples = sample(scenario.density, n, seed)
    eigenvalue, v, scaled_degrees = _sample_eigenpair(scenario, samples)

    regime = RegimeEnum.CONSISTENT
    if scenario.kind == ClusteringKindEnum.UNNORMALIZED and scaled_degrees.min() <= eigenvalue <= scaled_degrees.max():
        regime = RegimeEnum.INCONSISTENT

    vec_sup_err, sign = NAN, 0
    if _compares_vectors(scenario, reference):
        restricted = reference.function(samples.points)
        sign, aligned = align_sign(v, restricted / np.linalg.norm(restricted))
        vec_sup_err = float(np.abs(math.sqrt(n) * aligned - restricted).max())

    return ConvergenceRecord(
        n=n,
        rep=rep,
        seed=seed,
        lambda2_sample=eigenvalue,
        lambda2_limit=reference.eigenvalue,
        vec_sup_err=vec_sup_err,
        sign=sign,
        ipr=ipr(v),
        regime=regime,
    )


def _work_items(n_list: tuple[int, ...], reps: int, seed: int) -> list[tuple[int, int, int]]:
    return [(n, rep, derive_seed(seed, index, rep)) for index, n in enumerate(n_list) for rep in range(reps)]


def run_convergence(
    scenario: Scenario,
    n_list: list[int] | tuple[int, ...],
    reps: int,
    seed: int,
    reference: LimitReference | None = None,
) -> ConvergenceSeries:
    """
    Compare lambda_2 and its eigenvector with the grid limit for every (n, rep).

    Repetitions run on a thread pool capped by SPECLAB_THREADS; each work item owns a seed
    derived from (seed, n index, rep), and rows are sorted by (n, rep), so results do not depend
    on scheduling.

    Raises:
        InvalidNListError: If ``n_list`` has fewer than 4 ascending entries.
        DegenerateEigenvalueError: If eigenvectors are compared but the limit lambda_2 is not simple.
    """
    n_list = _check_n_list(n_list)
    reference = reference or build_reference(scenario)
    if reference.degenerate and _compares_vectors(scenario, reference):
        raise DegenerateEigenvalueError(index=2, value=reference.eigenvalue)

    items = _work_items(n_list, reps, seed)
    experiment_logger.info(
        f"Convergence study {scenario.id}: n={list(n_list)}, reps={reps}, seed={seed}, "
        f"threads={lab_settings.THREADS}."
    )
    with ThreadPoolExecutor(max_workers=lab_settings.THREADS) as executor:
        records = list(executor.map(lambda item: _convergence_row(scenario, reference, *item), items))

    inconsistent = sum(record.regime == RegimeEnum.INCONSISTENT for record in records)
    if inconsistent:
        experiment_logger.warning(
            f"{inconsistent} of {len(records)} rows of {scenario.id} have lambda_2 inside the critical region."
        )
    return ConvergenceSeries(
        scenario=scenario,
        seed=seed,
        n_list=n_list,
        reps=reps,
        records=tuple(sorted(records, key=lambda record: (record.n, record.rep))),
    )


def fit_rate(series: ConvergenceSeries, field: RateFieldEnum) -> RateFit:
    """
    Ordinary least squares on (log n, log median error).

    Non-positive or missing medians are dropped with a warning.

    Raises:
        NotEnoughRatePointsError: If fewer than 4 usable points remain.
    """
    medians = series.medians(field)
    usable = {n: value for n, value in medians.items() if np.isfinite(value) and value > 0.0}
    dropped = sorted(set(medians) - set(usable))
    if dropped:
        experiment_logger.warning(f"Rate fit of {field.value} drops n={dropped}: median error is zero or missing.")
    if len(usable) < MIN_RATE_POINTS:
        raise NotEnoughRatePointsError(minimum=MIN_RATE_POINTS, got=len(usable))

    x = np.log(np.array(list(usable), dtype=np.float64))
    y = np.log(np.array(list(usable.values())))
    slope, intercept = np.polyfit(x, y, 1)

    ss_res = float(np.sum((y - (slope * x + intercept)) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_res == 0.0 or ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RateFit(field=field, slope=float(slope), intercept=float(intercept), r2=r2, points=len(usable))


def _sup_deviation_row(
    scenario: Scenario, degree: DegreeFunction, probes: np.ndarray, n: int, rep: int, seed: int
) -> ConvergenceRecord:
    samples = sample(scenario.density, n, seed)
    empirical = scenario.kernel.matrix(probes, samples.points).mean(axis=1)
    deviation = float(np.abs(empirical - degree.evaluate(probes)).max())
    return ConvergenceRecord(n=n, rep=rep, seed=seed, sup_dev=deviation)


def empirical_sup_deviation(
    scenario: Scenario, n_list: list[int] | tuple[int, ...], reps: int, seed: int
) -> ConvergenceSeries:
    """
    sup_x |d_n(x) - d(x)| over a uniform probe grid for every (n, rep).

    Work items use the same derived seeds as :func:`run_convergence`, so both studies see the same samples.
    """
    n_list = _check_n_list(n_list)
    degree = true_degree(scenario)
    probes = np.linspace(*scenario.density.support, lab_settings.PROBES)

    items = _work_items(n_list, reps, seed)
    experiment_logger.info(f"Sup deviation study {scenario.id}: n={list(n_list)}, reps={reps}, seed={seed}.")
    with ThreadPoolExecutor(max_workers=lab_settings.THREADS) as executor:
        records = list(executor.map(lambda item: _sup_deviation_row(scenario, degree, probes, *item), items))

    return ConvergenceSeries(
        scenario=scenario,
        seed=seed,
        n_list=n_list,
        reps=reps,
        records=tuple(sorted(records, key=lambda record: (record.n, record.rep))),
    )


def function_class_deviation(
    scenario: Scenario,
    samples: SampleSet,
    reference: LimitReference,
    probes: int = PAIR_PROBES,
) -> float:
    """
    sup over F = K u (u.H) u (H.H) of |P_n g - P g|, with P the quadrature measure.

    k(x, .) and u h(x, .) are scanned over ``lab_settings.PROBES`` points x, the products
    h(x, .) h(y, .) over a ``probes`` x ``probes`` grid. h = k / sqrt(d d) uses the true degree function.
    """
    kernel = scenario.kernel
    degree = true_degree(scenario)
    nodes = reference.system.nodes
    weights = reference.grid_weights
    points = samples.points
    scan = np.linspace(*scenario.density.support, lab_settings.PROBES)
    coarse = np.linspace(*scenario.density.support, probes)
    scan_degree, coarse_degree, point_degree, node_degree = (
        degree.evaluate(x) for x in (scan, coarse, points, nodes)
    )

    def normalized(x: np.ndarray, x_degree: np.ndarray, y: np.ndarray, y_degree: np.ndarray) -> np.ndarray:
        return kernel.matrix(x, y) / np.sqrt(x_degree[:, None] * y_degree[None, :])

    kernel_part = np.abs(kernel.matrix(scan, points).mean(axis=1) - kernel.matrix(scan, nodes) @ weights).max()

    u_sample = reference.function(points)
    u_nodes = reference.system.eigenvectors[:, 1]
    eigen_part = np.abs(
        normalized(scan, scan_degree, points, point_degree) @ u_sample / samples.n
        - normalized(scan, scan_degree, nodes, node_degree) @ (weights * u_nodes)
    ).max()

    on_sample = normalized(coarse, coarse_degree, points, point_degree)
    on_grid = normalized(coarse, coarse_degree, nodes, node_degree)
    product_part = np.abs(on_sample @ on_sample.T / samples.n - (on_grid * weights) @ on_grid.T).max()

    return float(max(kernel_part, eigen_part, product_part))


def class_deviation_ratios(series: ConvergenceSeries, reference: LimitReference | None = None) -> ClassDeviationRatios:
    """
    Median over repetitions of vec_sup_err / function_class_deviation for every n of ``series``.

    The samples are regenerated from the seeds stored in the rows.
    """
    scenario = series.scenario
    reference = reference or build_reference(scenario)

    ratios = []
    for n in series.n_list:
        values = []
        for record in series.records:
            if record.n != n or not np.isfinite(record.vec_sup_err):
                continue
            deviation = function_class_deviation(scenario, sample(scenario.density, n, record.seed), reference)
            values.append(record.vec_sup_err / deviation)
        ratios.append(float(np.median(values)) if values else NAN)

    experiment_logger.info(f"Eigenvector error to class deviation ratios of {scenario.id}: {ratios}.")
    return ClassDeviationRatios(n_list=series.n_list, ratios=tuple(ratios))


def _figure_panel(samples: SampleSet, sigma: float, kind: ClusteringKindEnum, margin: float) -> FigurePanel:
    kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=sigma, support=MIXTURE_SUPPORT)
    laplacian = build_laplacian(build_similarity(samples, kernel), kind.laplacian)
    system = eig_sym(laplacian.entries, FIGURE_EIGENVALUES)
    report, vectors = diagnose_laplacian(laplacian, system, margin)

    return FigurePanel(
        sigma=sigma,
        kind=kind,
        eigenvalues=system.eigenvalues,
        eigenvectors=vectors[:, :FIGURE_EIGENVECTORS],
        min_degree=float((laplacian.degrees.values / samples.n).min()),
        region=report.region,
        report=report,
    )


def run_figures(seed: int, n: int = FIGURE_SAMPLE_SIZE, margin: float = lab_settings.MARGIN) -> FigureData:
    """
    Spectra of both Laplacians for Gaussian kernels of width 1, 2, 5 and 50 on one mixture sample.
    """
    samples = sample(figure_mixture(), n, seed)
    experiment_logger.info(f"Figure study on {n} mixture points, seed={seed}.")
    panels = tuple(
        _figure_panel(samples, sigma, kind, margin)
        for sigma in FIGURE_SIGMAS
        for kind in (ClusteringKindEnum.UNNORMALIZED, ClusteringKindEnum.NORMALIZED)
    )
    return FigureData(seed=seed, n=n, points=samples.points, components=samples.components, panels=panels)
