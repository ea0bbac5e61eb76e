from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat, ValidationInfo, field_validator

from config.config import lab_settings
from src.cli.enums import CommandEnum
from src.lab.experiments import Scenario, figure_mixture
from src.lab.experiments.services import MIN_N_VALUES
from src.lab.model import DensityKindEnum, GaussianMixtureDensity, KernelKindEnum, KernelSpec, PiecewiseExample2Density
from src.lab.spectral_core import ClusteringKindEnum

STUDY_COMMANDS = (CommandEnum.CONVERGE, CommandEnum.SUPDEV)


def _split_ints(val: Any) -> Any:
    if isinstance(val, str):
        return [int(item) for item in val.split(",") if item.strip()]
    return val


class RunConfig(BaseModel):
    """
    Everything one CLI invocation needs; unknown keys are rejected.

    A run manifest echoes this model under its ``config`` key, so a manifest can be fed back
    through ``--config`` to reproduce the run.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: CommandEnum
    density: DensityKindEnum = DensityKindEnum.GAUSSIAN_MIXTURE
    s: float = Field(default=0.3, gt=0.0, lt=3.0)
    means: list[float] | None = None
    stds: list[PositiveFloat] | None = None
    weights: list[float] | None = None
    kernel: KernelKindEnum = KernelKindEnum.GAUSSIAN
    sigma: PositiveFloat | None = 1.0
    value: PositiveFloat | None = None
    kind: ClusteringKindEnum = ClusteringKindEnum.NORMALIZED
    n: int = Field(default=200, ge=2)
    n_list: tuple[int, ...] | None = Field(default=None, validate_default=True)
    reps: int = Field(default=lab_settings.REPS, ge=1)
    seed: NonNegativeInt = 0
    grid_n: int = Field(default=lab_settings.GRID_N, ge=16)
    margin: float = Field(default=lab_settings.MARGIN, ge=0.0)
    r: int = Field(default=10, ge=5)
    vectors: tuple[int, ...] = (1, 2, 3, 4, 5)
    svg: bool = True
    class_ratios: bool = False
    out: Path = Path(lab_settings.OUTPUT_DIR)

    @field_validator("n_list", mode="before")
    def parse_n_list(cls, val: Any) -> Any:
        return _split_ints(val)

    @field_validator("n_list")
    def n_list_for_studies(cls, val: tuple[int, ...] | None, info: ValidationInfo) -> tuple[int, ...] | None:
        if info.data.get("command") not in STUDY_COMMANDS:
            return val
        if val is None or len(val) < MIN_N_VALUES:
            raise ValueError(f"at least {MIN_N_VALUES} sample sizes are required")
        if any(a >= b for a, b in zip(val[:-1], val[1:])) or val[0] < 2:
            raise ValueError("sample sizes must be ascending and at least 2")
        return val

    @field_validator("vectors", mode="before")
    def parse_vectors(cls, val: Any) -> Any:
        return _split_ints(val)

    @field_validator("vectors")
    def vectors_in_range(cls, val: tuple[int, ...]) -> tuple[int, ...]:
        if any(not 1 <= index <= 5 for index in val):
            raise ValueError("eigenvector indices must lie in 1..5")
        return val

    def build_density(self) -> PiecewiseExample2Density | GaussianMixtureDensity:
        if self.density == DensityKindEnum.PIECEWISE_EXAMPLE2:
            return PiecewiseExample2Density(s=self.s)

        default = figure_mixture()
        return GaussianMixtureDensity(
            means=self.means or default.means,
            stds=self.stds or default.stds,
            weights=self.weights or default.weights,
        )

    def build_scenario(self) -> Scenario:
        """
        Assemble the scenario; raises ``ValidationError`` for inconsistent density or kernel parameters.
        """
        density = self.build_density()
        kernel = KernelSpec(
            kind=self.kernel,
            support=density.support,
            sigma=self.sigma if self.kernel == KernelKindEnum.GAUSSIAN else None,
            value=self.value if self.kernel == KernelKindEnum.CONSTANT else None,
        )
        width = f"{self.sigma:g}" if self.kernel == KernelKindEnum.GAUSSIAN else ""
        return Scenario(
            id=f"{self.density.value}-{self.kernel.value}{width}-{self.kind.value}",
            density=density,
            kernel=kernel,
            kind=self.kind,
            grid_n=self.grid_n,
            compare_vectors=self.kernel != KernelKindEnum.CONSTANT,
        )


class OutputBundle(BaseModel):
    """
    Files written by one run, relative to ``directory``.

    Attributes:
        directory (Path): The ``--out`` directory.
        files (tuple[str, ...]): CSV and SVG files written, in write order.
        spectra (tuple[str, ...]): Sub-directories holding eigenvalues.csv / eigenvectors.csv /
            region.csv triples that SVG figures can be drawn from ("." for the directory itself).
        manifest (dict): The manifest written to manifest.json.
        summary (tuple[str, ...]): Human readable result lines the CLI prints.
    """

    directory: Path
    files: tuple[str, ...] = ()
    spectra: tuple[str, ...] = ()
    manifest: dict[str, Any] = Field(default_factory=dict)
    summary: tuple[str, ...] = ()
