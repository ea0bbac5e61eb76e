from src.lab.model.enums import DensityKindEnum, KernelKindEnum
from src.lab.model.schemas import (
    Density,
    GaussianMixtureDensity,
    KernelSpec,
    PiecewiseExample2Density,
    QuadratureGrid,
    SampleSet,
)
from src.lab.model.services import (
    build_grid,
    check_in_support,
    density_mass,
    density_pdf,
    kernel_eval,
    sample,
)

__all__ = [
    "DensityKindEnum",
    "KernelKindEnum",
    "Density",
    "PiecewiseExample2Density",
    "GaussianMixtureDensity",
    "KernelSpec",
    "SampleSet",
    "QuadratureGrid",
    "density_pdf",
    "density_mass",
    "sample",
    "kernel_eval",
    "build_grid",
    "check_in_support",
]
