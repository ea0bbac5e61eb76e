import numpy as np
import pytest

from src.lab.model import GaussianMixtureDensity, KernelKindEnum, KernelSpec, PiecewiseExample2Density
from src.lab.model.schemas import EXAMPLE2_SUPPORT, MIXTURE_SUPPORT


@pytest.fixture
def example2() -> PiecewiseExample2Density:
    return PiecewiseExample2Density(s=0.3)


@pytest.fixture
def mixture() -> GaussianMixtureDensity:
    return GaussianMixtureDensity(
        means=[2.0, 4.0, 6.0, 8.0], stds=[0.25] * 4, weights=[0.25] * 4, support=MIXTURE_SUPPORT
    )


@pytest.fixture
def product_kernel() -> KernelSpec:
    return KernelSpec(kind=KernelKindEnum.PRODUCT, support=EXAMPLE2_SUPPORT)


@pytest.fixture
def gaussian_kernel() -> KernelSpec:
    return KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=1.0, support=MIXTURE_SUPPORT)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)
