import math

import numpy as np
import pytest

from src.core.exceptions import ArgumentError, NumericalError
from src.lab.model import GaussianMixtureDensity, KernelKindEnum, KernelSpec, SampleSet, sample
from src.lab.model.exceptions import TooFewPointsError
from src.lab.model.schemas import MIXTURE_SUPPORT
from src.lab.spectral_core import (
    ClusteringKindEnum,
    DegreeVector,
    EigenCountError,
    LaplacianKindEnum,
    LengthMismatchError,
    NotSymmetricError,
    NotUnitVectorError,
    SimilarityMatrix,
    ZeroDegreeError,
    align_sign,
    bicluster,
    build_laplacian,
    build_similarity,
    degrees,
    eig_generalized,
    eig_sym,
    quadratic_form,
    quadratic_form_tolerance,
    rw_from_sym,
    threshold_cluster,
)


def random_similarity(rng: np.random.Generator, n: int) -> SimilarityMatrix:
    a = rng.uniform(0.1, 1.0, (n, n))
    return SimilarityMatrix(entries=(a + a.T) / 2.0)


def constant_similarity(c: float) -> SimilarityMatrix:
    return SimilarityMatrix(entries=np.full((2, 2), c))


@pytest.fixture
def mixture_sample(mixture) -> SampleSet:
    return sample(mixture, 120, 99)


class TestSimilarity:
    def test_product_kernel_at_one(self, example2, product_kernel):
        samples = SampleSet(points=np.array([1.0, 1.0]), seed=0, density=example2)
        np.testing.assert_array_equal(build_similarity(samples, product_kernel).entries, np.ones((2, 2)))

    def test_gaussian_entries(self, mixture):
        kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=2.0, support=MIXTURE_SUPPORT)
        samples = SampleSet(points=np.array([2.0, 4.0]), seed=0, density=mixture)
        entries = build_similarity(samples, kernel).entries
        assert entries[0, 1] == pytest.approx(math.exp(-1.0), rel=1e-14)
        assert entries[0, 0] == entries[1, 1] == 1.0

    def test_exactly_symmetric(self, mixture_sample, gaussian_kernel):
        entries = build_similarity(mixture_sample, gaussian_kernel).entries
        assert np.array_equal(entries, entries.T)
        assert entries.min() >= gaussian_kernel.lower_bound

    def test_too_few_points(self, example2, product_kernel):
        samples = SampleSet(points=np.array([1.5]), seed=0, density=example2)
        with pytest.raises(TooFewPointsError):
            build_similarity(samples, product_kernel)

    def test_rejects_asymmetric_entries(self):
        with pytest.raises(ValueError):
            SimilarityMatrix(entries=np.array([[1.0, 0.5], [0.4, 1.0]]))

    def test_rejects_entries_outside_kernel_bounds(self, product_kernel):
        SimilarityMatrix(entries=np.array([[1.0, 2.0], [2.0, 4.0]]), kernel=product_kernel)
        with pytest.raises(ValueError):
            SimilarityMatrix(entries=np.array([[1.0, 0.5], [0.5, 1.0]]), kernel=product_kernel)
        with pytest.raises(ValueError):
            SimilarityMatrix(entries=np.array([[1.0, 4.5], [4.5, 1.0]]), kernel=product_kernel)


class TestDegrees:
    def test_row_sums(self):
        np.testing.assert_array_equal(degrees(constant_similarity(1.0)).values, [2.0, 2.0])
        e = math.exp(-1.0)
        values = degrees(SimilarityMatrix(entries=np.array([[1.0, e], [e, 1.0]]))).values
        np.testing.assert_allclose(values, [1.0 + e, 1.0 + e])

    def test_kernel_lower_bound(self, mixture_sample, gaussian_kernel):
        values = degrees(build_similarity(mixture_sample, gaussian_kernel)).values
        assert values.min() >= mixture_sample.n * gaussian_kernel.lower_bound

    def test_rejects_values_outside_kernel_bounds(self, product_kernel):
        DegreeVector(values=[2.0, 8.0], kernel=product_kernel)
        with pytest.raises(ValueError):
            DegreeVector(values=[1.5, 3.0], kernel=product_kernel)
        with pytest.raises(ValueError):
            DegreeVector(values=[2.0, 8.5], kernel=product_kernel)


class TestLaplacian:
    def test_unnormalized_constant(self):
        laplacian = build_laplacian(constant_similarity(0.7), LaplacianKindEnum.UNNORM_SCALED)
        np.testing.assert_allclose(laplacian.entries, 0.35 * np.array([[1.0, -1.0], [-1.0, 1.0]]))

    def test_symmetric_constant_spectrum(self):
        laplacian = build_laplacian(constant_similarity(0.7), LaplacianKindEnum.SYM_NORM)
        np.testing.assert_allclose(eig_sym(laplacian.entries, 2).eigenvalues, [0.0, 1.0], atol=1e-14)

    def test_zero_degree(self):
        with pytest.raises(ZeroDegreeError):
            build_laplacian(SimilarityMatrix(entries=np.zeros((2, 2))), LaplacianKindEnum.SYM_NORM)
        assert issubclass(ZeroDegreeError, NumericalError)

    def test_trivial_vectors_annihilated(self, mixture_sample, gaussian_kernel):
        similarity = build_similarity(mixture_sample, gaussian_kernel)
        n = similarity.n
        bound = 1e-10 * n * gaussian_kernel.upper_bound
        ones = np.ones(n)

        unnormalized = build_laplacian(similarity, LaplacianKindEnum.UNNORM_SCALED)
        symmetric = build_laplacian(similarity, LaplacianKindEnum.SYM_NORM)
        random_walk = build_laplacian(similarity, LaplacianKindEnum.RW_NORM)

        assert np.abs(unnormalized.entries @ ones).max() <= bound
        assert np.abs(random_walk.entries @ ones).max() <= bound
        assert np.abs(symmetric.entries @ np.sqrt(symmetric.degrees.values)).max() <= bound
        assert np.array_equal(unnormalized.entries, unnormalized.entries.T)
        assert np.array_equal(symmetric.entries, symmetric.entries.T)

    @pytest.mark.parametrize("sigma", [1.0, 5.0, 50.0])
    def test_spectra_bounds(self, mixture_sample, sigma):
        kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=sigma, support=MIXTURE_SUPPORT)
        similarity = build_similarity(mixture_sample, kernel)
        n = similarity.n

        unnormalized = eig_sym(build_laplacian(similarity, LaplacianKindEnum.UNNORM_SCALED).entries, n)
        symmetric = eig_sym(build_laplacian(similarity, LaplacianKindEnum.SYM_NORM).entries, n)

        for system in (unnormalized, symmetric):
            assert system.eigenvalues.min() >= -1e-10
            assert abs(system.eigenvalues[0]) <= 1e-10
        assert symmetric.eigenvalues.max() <= 2.0 + 1e-10


class TestQuadraticForm:
    def test_two_points(self):
        assert quadratic_form(constant_similarity(0.4), np.array([1.0, 0.0])) == pytest.approx(0.4)

    def test_constant_vector(self, rng):
        similarity = random_similarity(rng, 10)
        assert quadratic_form(similarity, np.ones(10)) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 5, 16, 64])
    def test_matches_double_sum(self, rng, n):
        similarity = random_similarity(rng, n)
        f = rng.normal(size=n)
        k = similarity.entries

        brute = 0.0
        for i in range(n):
            for j in range(n):
                brute += k[i, j] * (f[i] - f[j]) ** 2
        brute *= 0.5

        scale = n * n * k.max() * np.abs(f).max() ** 2
        assert abs(quadratic_form(similarity, f) - brute) <= 1e-9 * scale

    def test_tolerance_tracks_small_vectors(self, rng):
        similarity = random_similarity(rng, 8)
        f = 1e-3 * rng.normal(size=8)
        sup = np.abs(f).max()
        expected = 1e-9 * 64 * similarity.upper_bound * sup**2
        assert quadratic_form_tolerance(similarity, f) == pytest.approx(expected, rel=1e-12)
        assert quadratic_form_tolerance(similarity, f) < 1e-9 * 64 * similarity.upper_bound
        rhs = 0.5 * np.sum(similarity.entries * (f[:, None] - f[None, :]) ** 2)
        assert quadratic_form(similarity, f) == pytest.approx(rhs, rel=1e-9)

    def test_zero_vector(self, rng):
        assert quadratic_form(random_similarity(rng, 5), np.zeros(5)) == 0.0

    def test_length_mismatch(self, rng):
        with pytest.raises(LengthMismatchError):
            quadratic_form(random_similarity(rng, 4), np.ones(3))


class TestEigSym:
    def test_two_by_two(self):
        system = eig_sym(0.5 * np.array([[1.0, -1.0], [-1.0, 1.0]]), 2)
        np.testing.assert_allclose(system.eigenvalues, [0.0, 1.0], atol=1e-14)
        np.testing.assert_allclose(np.abs(system.vector(0)), np.full(2, 1.0 / math.sqrt(2.0)))
        assert system.degenerate == (False, False)

    def test_identity_is_degenerate(self):
        system = eig_sym(np.eye(3), 3)
        np.testing.assert_allclose(system.eigenvalues, [1.0, 1.0, 1.0])
        assert all(system.degenerate)

    def test_reconstruction(self, rng):
        a = rng.normal(size=(20, 20))
        a = (a + a.T) / 2.0
        system = eig_sym(a, 20)
        rebuilt = (system.eigenvectors * system.eigenvalues) @ system.eigenvectors.T
        np.testing.assert_allclose(rebuilt, a, atol=1e-8)
        assert np.all(np.diff(system.eigenvalues) >= 0.0)
        np.testing.assert_allclose(np.linalg.norm(system.eigenvectors, axis=0), 1.0)

    def test_partial_spectrum(self, rng):
        a = rng.normal(size=(30, 30))
        a = (a + a.T) / 2.0
        np.testing.assert_allclose(eig_sym(a, 4).eigenvalues, np.linalg.eigvalsh(a)[:4], atol=1e-10)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetricError):
            eig_sym(np.array([[1.0, 2.0], [0.0, 1.0]]), 1)
        assert issubclass(NotSymmetricError, ArgumentError)

    @pytest.mark.parametrize("r", [0, 4])
    def test_rejects_bad_count(self, r):
        with pytest.raises(EigenCountError):
            eig_sym(np.eye(3), r)


class TestRandomWalk:
    def test_division_by_root_degree(self):
        degree = degrees(SimilarityMatrix(entries=np.array([[3.0, 1.0], [1.0, 0.0]])))
        v = rw_from_sym(np.array([2.0, 2.0]), degree)
        np.testing.assert_allclose(v, np.array([1.0, 2.0]) / math.sqrt(5.0))

    def test_unit_degrees_keep_vector(self):
        degree = degrees(SimilarityMatrix(entries=np.array([[0.5, 0.5], [0.5, 0.5]])))
        w = np.array([0.6, -0.8])
        np.testing.assert_allclose(rw_from_sym(w, degree), w)

    def test_eigen_correspondence(self, mixture_sample, gaussian_kernel):
        similarity = build_similarity(mixture_sample, gaussian_kernel)
        symmetric = build_laplacian(similarity, LaplacianKindEnum.SYM_NORM)
        random_walk = build_laplacian(similarity, LaplacianKindEnum.RW_NORM)
        system = eig_sym(symmetric.entries, 8)

        for index in range(system.r):
            v = rw_from_sym(system.vector(index), symmetric.degrees)
            residual = random_walk.entries @ v - system.eigenvalues[index] * v
            assert np.linalg.norm(residual) <= 1e-8

    def test_generalized_problem_agrees(self, mixture_sample, gaussian_kernel):
        similarity = build_similarity(mixture_sample, gaussian_kernel)
        symmetric = build_laplacian(similarity, LaplacianKindEnum.SYM_NORM)
        standard = eig_sym(symmetric.entries, 4)
        generalized = eig_generalized(similarity, 4)

        np.testing.assert_allclose(generalized.eigenvalues, standard.eigenvalues, atol=1e-9)
        for index in range(4):
            v = rw_from_sym(standard.vector(index), symmetric.degrees)
            assert abs(float(v @ generalized.vector(index))) == pytest.approx(1.0, abs=1e-6)


class TestClustering:
    def test_threshold_tie_goes_to_one(self):
        assert threshold_cluster(np.array([0.3, -0.2, 0.0]), 0.0).labels == (1, 0, 1)

    def test_threshold_extremes(self):
        assert threshold_cluster(np.ones(4), 0.0).labels == (1, 1, 1, 1)
        v = np.array([0.1, 0.5, -2.0])
        assert threshold_cluster(v, float(v.max()) + 1.0).labels == (0, 0, 0)

    def test_align_antipodal(self):
        sign, aligned = align_sign(np.array([-1.0, 0.0]), np.array([1.0, 0.0]))
        assert sign == -1
        np.testing.assert_array_equal(aligned, [1.0, 0.0])

    def test_align_identity_and_orthogonal(self):
        v = np.array([0.6, 0.8])
        sign, aligned = align_sign(v, v)
        assert sign == 1
        np.testing.assert_array_equal(aligned, v)
        assert align_sign(np.array([1.0, 0.0]), np.array([0.0, 1.0]))[0] == 1

    def test_align_projection_bound(self, rng):
        for _ in range(50):
            v = rng.normal(size=12)
            v /= np.linalg.norm(v)
            reference = rng.normal(size=12)
            reference /= np.linalg.norm(reference)
            _, aligned = align_sign(v, reference)
            projection = float(reference @ v) * v
            assert np.linalg.norm(aligned - reference) <= 2.0 * np.linalg.norm(reference - projection) + 1e-12

    def test_align_requires_unit_vectors(self):
        with pytest.raises(NotUnitVectorError):
            align_sign(np.array([2.0, 0.0]), np.array([1.0, 0.0]))

    @pytest.mark.parametrize("kind", list(ClusteringKindEnum))
    def test_bicluster_separates_two_components(self, kind):
        density = GaussianMixtureDensity(means=[2.0, 8.0], stds=[0.25, 0.25], weights=[0.5, 0.5])
        kernel = KernelSpec(kind=KernelKindEnum.GAUSSIAN, sigma=2.0, support=MIXTURE_SUPPORT)
        samples = sample(density, 100, 4)

        labels = np.asarray(bicluster(samples, kernel, kind).labels)
        components = np.asarray(samples.components)
        assert np.array_equal(labels, components) or np.array_equal(labels, 1 - components)
