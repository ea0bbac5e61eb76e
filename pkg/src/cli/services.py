import json
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from pydantic import ValidationError

from config.config import app_settings
from src.cli.enums import CommandEnum, SvgKindEnum
from src.cli.exceptions import ConfigFileError
from src.cli.handlers import transform_validation_errors
from src.cli.schemas import OutputBundle, RunConfig
from src.cli.svg import emit_svg
from src.core.utils import cli_logger
from src.lab.diagnostics import EigenvalueStatusEnum, SpectrumReport, count_below_region, diagnose_laplacian
from src.lab.experiments import (
    ConvergenceSeries,
    NotEnoughRatePointsError,
    RateFieldEnum,
    Scenario,
    build_reference,
    class_deviation_ratios,
    empirical_sup_deviation,
    fit_rate,
    run_convergence,
    run_figures,
    true_degree,
)
from src.lab.limit_ops import LimitKindEnum, build_limit, essential_range, example2_roots, limit_eigs
from src.lab.model import KernelKindEnum, PiecewiseExample2Density, SampleSet, build_grid, sample
from src.lab.spectral_core import bicluster, build_laplacian, build_similarity, eig_sym

MANIFEST = "manifest.json"
SPECTRUM_VECTORS = 5
LIMIT_FUNCTIONS = 5
RANGE_MARGIN = 1e-6


def _load_config_file(path: Path) -> dict[str, Any]:
    """
    Read a JSON config; a run manifest is accepted too, its ``config`` key holding the values.
    """
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigFileError(path=path, detail=exc) from exc
    if not isinstance(data, dict):
        raise ConfigFileError(path=path, detail="expected a JSON object")
    if isinstance(data.get("config"), dict):
        return dict(data["config"])
    return data


def parse_config(flags: dict[str, Any], config_file: Path | None = None) -> RunConfig:
    """
    Merge settings defaults, the config file and command line flags, in increasing precedence.

    Flags left unset (``None``) do not override file values. Scenario parameters are validated
    here too, so every usage error surfaces before any computation starts.

    Raises:
        InvalidConfigError: Naming every invalid or unknown field.
        ConfigFileError: If the config file cannot be read.
    """
    values = _load_config_file(config_file) if config_file else {}
    values.update({key: value for key, value in flags.items() if value is not None})

    try:
        cfg = RunConfig(**values)
        if cfg.command != CommandEnum.FIGURES:
            cfg.build_scenario()
    except ValidationError as exc:
        raise transform_validation_errors(exc) from exc

    cli_logger.info(f"Parsed {cfg.command.value} config: seed={cfg.seed}, out={cfg.out}.")
    return cfg


def _round(value: float, digits: int) -> float:
    return round(float(value), digits) + 0.0


class RunService:
    """
    Runs one CLI command and writes its artifacts under ``cfg.out``.

    Every command writes its CSVs, the optional SVG figures and finally ``manifest.json``, which
    names the seed and echoes the full config so that feeding it back through ``--config``
    reproduces every CSV byte for byte.

    Attributes:
        cfg (RunConfig): The validated run configuration.
        directory (Path): The output directory.
    """

    def __init__(self, cfg: RunConfig) -> None:
        self.cfg = cfg
        self.directory = Path(cfg.out)
        self.files: list[str] = []
        self.spectra: list[str] = []
        self.summary: list[str] = []

    def write_csv(self, name: str, frame: pd.DataFrame) -> None:
        path = self.directory / name
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, na_rep="nan", lineterminator="\n")
        self.files.append(name)

    def write_spectrum(self, prefix: str, points: np.ndarray, report: SpectrumReport, vectors: np.ndarray) -> None:
        """
        Write eigenvalues.csv, eigenvectors.csv and region.csv for one spectrum.
        """
        self.write_csv(
            f"{prefix}eigenvalues.csv",
            pd.DataFrame(
                {
                    "index": [record.index for record in report.records],
                    "eigenvalue": [record.eigenvalue for record in report.records],
                    "status": [record.status.value for record in report.records],
                    "ipr": [record.ipr for record in report.records],
                }
            ),
        )
        columns = {"point": np.arange(points.size), "x": points}
        columns.update({f"v{index + 1}": vectors[:, index] for index in range(vectors.shape[1])})
        self.write_csv(f"{prefix}eigenvectors.csv", pd.DataFrame(columns))
        region = report.region
        self.write_csv(
            f"{prefix}region.csv",
            pd.DataFrame(
                {
                    "lo": [region.lo],
                    "hi": [region.hi],
                    "margin": [region.margin],
                    "laplacian": [region.laplacian.value],
                }
            ),
        )
        self.spectra.append(prefix.rstrip("/") or ".")

    def sample_spectrum(self, scenario: Scenario, samples: SampleSet) -> SpectrumReport:
        laplacian = build_laplacian(build_similarity(samples, scenario.kernel), scenario.kind.laplacian)
        system = eig_sym(laplacian.entries, self.cfg.r)
        report, vectors = diagnose_laplacian(laplacian, system, self.cfg.margin)
        self.write_spectrum("", samples.points, report, vectors[:, :SPECTRUM_VECTORS])
        return report

    def report_lines(self, report: SpectrumReport) -> None:
        counts = {status: 0 for status in EigenvalueStatusEnum}
        for record in report.records:
            counts[record.status] += 1
        self.summary.append(
            f"critical region: [{report.region.lo!r}, {report.region.hi!r}]; "
            + ", ".join(f"{status.value}={count}" for status, count in counts.items())
        )
        self.summary.append(f"eigenvalues below the region: {count_below_region(report)}")

    def cluster(self, scenario: Scenario) -> None:
        samples = sample(scenario.density, self.cfg.n, self.cfg.seed)
        report = self.sample_spectrum(scenario, samples)
        assignment = bicluster(samples, scenario.kernel, scenario.kind)

        columns = {"point": np.arange(samples.n), "x": samples.points, "label": list(assignment.labels)}
        if samples.components is not None:
            columns["component"] = list(samples.components)
        self.write_csv("clusters.csv", pd.DataFrame(columns))

        size = sum(assignment.labels)
        self.summary.append(f"cluster sizes: {samples.n - size} / {size}")
        self.report_lines(report)

    def diagnose(self, scenario: Scenario) -> None:
        report = self.sample_spectrum(scenario, sample(scenario.density, self.cfg.n, self.cfg.seed))
        self.report_lines(report)

    def limit(self, scenario: Scenario) -> None:
        essential = essential_range(true_degree(scenario))
        grid = build_grid(scenario.density, scenario.grid_n)
        kind = LimitKindEnum(scenario.kind.value)
        system = limit_eigs(build_limit(kind, scenario.kernel, grid), self.cfg.r)

        self.write_csv(
            "limit_eigenvalues.csv",
            pd.DataFrame(
                {
                    "index": np.arange(1, system.r + 1),
                    "eigenvalue": system.eigenvalues,
                    "degenerate": list(system.degenerate),
                    "in_range": [
                        kind == LimitKindEnum.UNNORMALIZED_U and essential.contains(float(value), RANGE_MARGIN)
                        for value in system.eigenvalues
                    ],
                }
            ),
        )
        columns = {"node": np.arange(grid.size), "x": grid.nodes}
        columns.update({f"f{index + 1}": system.eigenvectors[:, index] for index in range(LIMIT_FUNCTIONS)})
        self.write_csv("limit_eigenfunctions.csv", pd.DataFrame(columns))
        self.write_csv("range.csv", pd.DataFrame({"lo": [essential.lo], "hi": [essential.hi]}))

        if isinstance(scenario.density, PiecewiseExample2Density) and scenario.kernel.kind == KernelKindEnum.PRODUCT:
            roots = [_round(root, 9) for root in example2_roots(scenario.density.s)]
            self.write_csv("roots.csv", pd.DataFrame({"root": roots}, dtype=np.float64))
            self.summary.append(f"roots: {roots}")
        self.summary.append(f"range: [{_round(essential.lo, 12)!r}, {_round(essential.hi, 12)!r}]")
        self.summary.append(f"lambda_2 = {float(system.eigenvalues[1])!r}")

    def rate(self, name: str, series: ConvergenceSeries, field: RateFieldEnum) -> None:
        try:
            fit = fit_rate(series, field)
        except NotEnoughRatePointsError as exc:
            cli_logger.warning(f"No {name} written: {exc.message}")
            return
        self.write_csv(name, pd.DataFrame({"slope": [fit.slope], "intercept": [fit.intercept], "r2": [fit.r2]}))
        self.summary.append(f"{field.value} slope: {fit.slope!r} (r2={fit.r2!r})")

    def converge(self, scenario: Scenario) -> None:
        reference = build_reference(scenario)
        series = run_convergence(scenario, self.cfg.n_list, self.cfg.reps, self.cfg.seed, reference=reference)
        self.write_csv(
            "convergence.csv",
            pd.DataFrame(
                {
                    "n": [record.n for record in series.records],
                    "rep": [record.rep for record in series.records],
                    "lambda2_sample": [record.lambda2_sample for record in series.records],
                    "lambda2_limit": [record.lambda2_limit for record in series.records],
                    "vec_sup_err": [record.vec_sup_err for record in series.records],
                    "sign": [record.sign for record in series.records],
                }
            ),
        )
        self.rate("rate.csv", series, RateFieldEnum.LAMBDA_ERROR)

        compared = any(np.isfinite(record.vec_sup_err) for record in series.records)
        if compared:
            self.rate("vector_rate.csv", series, RateFieldEnum.VEC_SUP_ERR)
        if compared and self.cfg.class_ratios:
            ratios = class_deviation_ratios(series, reference)
            self.write_csv("ratios.csv", pd.DataFrame({"n": list(ratios.n_list), "ratio": list(ratios.ratios)}))
            self.summary.append(f"ratio growth: {ratios.growth!r}")

        medians = series.medians(RateFieldEnum.LAMBDA_ERROR)
        self.summary.append(f"median lambda error: {medians}")

    def supdev(self, scenario: Scenario) -> None:
        series = empirical_sup_deviation(scenario, self.cfg.n_list, self.cfg.reps, self.cfg.seed)
        self.write_csv(
            "supdev.csv",
            pd.DataFrame(
                {
                    "n": [record.n for record in series.records],
                    "rep": [record.rep for record in series.records],
                    "sup_dev": [record.sup_dev for record in series.records],
                }
            ),
        )
        self.rate("supdev_rate.csv", series, RateFieldEnum.SUP_DEV)

    def figures(self) -> None:
        data = run_figures(self.cfg.seed, self.cfg.n, self.cfg.margin)
        self.write_csv(
            "points.csv",
            pd.DataFrame({"point": np.arange(data.n), "x": data.points, "component": list(data.components)}),
        )
        for panel in data.panels:
            prefix = f"sigma{panel.sigma:g}-{panel.kind.value}/"
            self.write_spectrum(prefix, data.points, panel.report, panel.eigenvectors)
            self.summary.append(
                f"{prefix.rstrip('/')}: min d_i/n = {panel.min_degree!r}, "
                f"below region = {count_below_region(panel.report)}"
            )

    def manifest(self, scenario_id: str) -> dict[str, Any]:
        return {
            "tool": app_settings.APP_NAME,
            "version": app_settings.APP_VERSION,
            "command": self.cfg.command.value,
            "seed": self.cfg.seed,
            "scenario": scenario_id,
            "grid_n": self.cfg.grid_n,
            "config": self.cfg.model_dump(mode="json"),
            "files": list(self.files),
        }

    def run(self) -> OutputBundle:
        command = self.cfg.command
        self.directory.mkdir(parents=True, exist_ok=True)

        if command == CommandEnum.FIGURES:
            scenario_id = "figure-mixture"
            self.figures()
        else:
            scenario = self.cfg.build_scenario()
            scenario_id = scenario.id
            getattr(self, command.value)(scenario)

        if self.cfg.svg and self.spectra:
            bundle = OutputBundle(
                directory=self.directory, spectra=tuple(self.spectra), manifest={"scenario": scenario_id}
            )
            for kind in SvgKindEnum:
                for path in emit_svg(bundle, kind, self.cfg.vectors):
                    self.files.append(path.relative_to(self.directory).as_posix())

        manifest = self.manifest(scenario_id)
        (self.directory / MANIFEST).write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
        cli_logger.info(f"{command.value} wrote {len(self.files)} files and {MANIFEST} to {self.directory}.")
        return OutputBundle(
            directory=self.directory,
            files=tuple(self.files),
            spectra=tuple(self.spectra),
            manifest=manifest,
            summary=tuple(self.summary),
        )


def dispatch(cfg: RunConfig) -> OutputBundle:
    """
    Run the pipeline named by ``cfg.command`` and return what it wrote.
    """
    return RunService(cfg).run()
