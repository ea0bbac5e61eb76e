import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.exceptions import ArgumentError, ScenarioError
from src.lab.model import (
    GaussianMixtureDensity,
    KernelKindEnum,
    KernelSpec,
    PiecewiseExample2Density,
    build_grid,
    density_mass,
    density_pdf,
    kernel_eval,
    sample,
)
from src.lab.model.exceptions import DomainError
from src.lab.model.schemas import EXAMPLE2_SUPPORT, MIXTURE_SUPPORT


class TestDensity:
    def test_example2_levels(self, example2):
        assert density_pdf(example2, 1.5) == pytest.approx(0.3)
        assert density_pdf(example2, 1.1) == pytest.approx(1.35)

    def test_example2_interval_is_half_open(self, example2):
        assert density_pdf(example2, 4.0 / 3.0) == pytest.approx(0.3)
        assert density_pdf(example2, 5.0 / 3.0) == pytest.approx(1.35)

    def test_outside_support_is_a_domain_error(self, example2):
        with pytest.raises(DomainError):
            density_pdf(example2, 2.5)
        assert issubclass(DomainError, ScenarioError)

    @pytest.mark.parametrize("s", [0.3, 1.0, 1.5, 2.5])
    def test_example2_normalization(self, s):
        assert density_mass(PiecewiseExample2Density(s=s)) == pytest.approx(1.0, abs=1e-9)

    def test_mixture_normalization(self, mixture):
        assert density_mass(mixture) == pytest.approx(1.0, abs=1e-9)

    def test_example2_support_is_fixed(self):
        with pytest.raises(ValidationError):
            PiecewiseExample2Density(s=0.3, support=(0.0, 2.0))

    @pytest.mark.parametrize("s", [0.0, 3.0, -1.0])
    def test_example2_rejects_s_outside_open_interval(self, s):
        with pytest.raises(ValidationError):
            PiecewiseExample2Density(s=s)

    def test_mixture_weights_sum_to_one(self):
        with pytest.raises(ValidationError):
            GaussianMixtureDensity(means=[2.0, 4.0], stds=[0.25, 0.25], weights=[0.5, 0.6])


class TestSample:
    def test_seed_determinism(self, example2):
        first = sample(example2, 5, 42)
        second = sample(example2, 5, 42)
        assert first.points.tobytes() == second.points.tobytes()
        assert first.seed == 42

    def test_different_seeds_differ(self, example2):
        assert not np.array_equal(sample(example2, 50, 1).points, sample(example2, 50, 2).points)

    def test_mixture_points_in_support(self, mixture):
        points = sample(mixture, 200, 7).points
        assert points.min() >= 0.0
        assert points.max() <= 10.0

    def test_mixture_records_components(self, mixture):
        draws = sample(mixture, 400, 11)
        components = np.asarray(draws.components)
        assert components.shape == (400,)
        assert set(components.tolist()) == {0, 1, 2, 3}
        # components are far apart: every point lies within 8 stds of its own mean
        means = np.asarray(mixture.means)[components]
        assert np.all(np.abs(draws.points - means) < 2.0)

    def test_mixture_rejection_keeps_narrow_support(self):
        density = GaussianMixtureDensity(means=[5.0], stds=[1.0], weights=[1.0], support=(4.5, 5.5))
        points = sample(density, 500, 3).points
        assert points.min() >= 4.5
        assert points.max() <= 5.5

    def test_example2_first_moment(self, example2):
        points = sample(example2, 10_000, 123).points
        assert points.mean() == pytest.approx(1.5, abs=0.02)

    def test_example2_inner_mass(self, example2):
        points = sample(example2, 20_000, 5).points
        inner = np.mean((points >= 4.0 / 3.0) & (points < 5.0 / 3.0))
        assert inner == pytest.approx(0.1, abs=0.01)

    def test_too_few_points(self, example2):
        with pytest.raises(ArgumentError):
            sample(example2, 1, 0)


class TestKernel:
    def test_gaussian_value(self):
        kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=2.0, support=MIXTURE_SUPPORT)
        assert kernel_eval(kernel, 2.0, 4.0) == pytest.approx(math.exp(-1.0), rel=1e-12)
        assert kernel_eval(kernel, 3.7, 3.7) == 1.0

    def test_product_value(self, product_kernel):
        assert kernel_eval(product_kernel, 1.5, 2.0) == 3.0

    def test_constant_value(self):
        kernel = KernelSpec(kind=KernelKindEnum.CONSTANT, value=0.5, support=EXAMPLE2_SUPPORT)
        assert kernel_eval(kernel, 1.1, 1.9) == 0.5
        assert kernel.lower_bound == kernel.upper_bound == 0.5

    def test_stored_bounds(self, product_kernel):
        assert product_kernel.lower_bound == 1.0
        assert product_kernel.upper_bound == 4.0
        gaussian = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=5.0, support=MIXTURE_SUPPORT)
        assert gaussian.lower_bound == pytest.approx(math.exp(-100.0 / 25.0))
        assert gaussian.upper_bound == 1.0

    @pytest.mark.parametrize("sigma", [0.5, 1.0, 5.0, 50.0])
    def test_symmetry_and_bounds(self, sigma, rng):
        kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=sigma, support=MIXTURE_SUPPORT)
        x = rng.uniform(0.0, 10.0, 1000)
        y = rng.uniform(0.0, 10.0, 1000)
        forward = kernel.evaluate(x, y)
        assert np.array_equal(forward, kernel.evaluate(y, x))
        assert np.all(forward >= kernel.lower_bound)
        assert np.all(forward <= kernel.upper_bound)

    def test_product_symmetry_and_bounds(self, product_kernel, rng):
        x = rng.uniform(1.0, 2.0, 1000)
        y = rng.uniform(1.0, 2.0, 1000)
        forward = product_kernel.evaluate(x, y)
        assert np.array_equal(forward, product_kernel.evaluate(y, x))
        assert np.all((forward >= 1.0) & (forward <= 4.0))

    def test_domain_check(self, product_kernel):
        with pytest.raises(DomainError):
            kernel_eval(product_kernel, 0.5, 1.5)

    def test_product_needs_positive_support(self):
        with pytest.raises(ValidationError):
            KernelSpec(kind=KernelKindEnum.PRODUCT, support=(0.0, 1.0))

    def test_gaussian_needs_sigma(self):
        with pytest.raises(ValidationError):
            KernelSpec(kind=KernelKindEnum.GAUSSIAN, support=MIXTURE_SUPPORT)


class TestGrid:
    def test_weights_normalized(self, example2):
        grid = build_grid(example2, 1000)
        assert grid.weights.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(np.diff(grid.nodes) > 0.0)

    def test_example2_first_moment(self, example2):
        grid = build_grid(example2, 1000)
        assert float(grid.nodes @ grid.weights) == pytest.approx(1.5, abs=1e-3)

    def test_mixture_first_moment(self, mixture):
        grid = build_grid(mixture, 2000)
        assert float(grid.nodes @ grid.weights) == pytest.approx(5.0, abs=1e-2)

    def test_midpoint_nodes(self, example2):
        grid = build_grid(example2, 16)
        assert grid.nodes[0] == pytest.approx(1.0 + 1.0 / 32.0)
        assert grid.nodes[-1] == pytest.approx(2.0 - 1.0 / 32.0)

    def test_too_few_nodes(self, example2):
        with pytest.raises(ArgumentError):
            build_grid(example2, 15)
