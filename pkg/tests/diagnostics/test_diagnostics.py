import numpy as np
import pytest

from src.core.exceptions import ArgumentError
from src.lab.diagnostics import (
    CriticalRegion,
    EigenvalueStatusEnum,
    classify_eigenvalues,
    count_below_region,
    estimate_critical_region,
    diagnose_laplacian,
    ipr,
)
from src.lab.model import KernelKindEnum, KernelSpec, sample
from src.lab.model.schemas import EXAMPLE2_SUPPORT
from src.lab.spectral_core import (
    DegreeVector,
    EigenSystem,
    LaplacianKindEnum,
    NotUnitVectorError,
    build_laplacian,
    build_similarity,
    degrees,
    eig_sym,
    rw_from_sym,
)


@pytest.fixture
def region() -> CriticalRegion:
    return CriticalRegion(lo=1.5, hi=3.0, margin=0.05)


class TestCriticalRegion:
    def test_direct_formula(self):
        estimate = estimate_critical_region(DegreeVector(values=[2.0, 4.0, 6.0]), 3, 0.05)
        assert estimate.lo == pytest.approx(2.0 / 3.0)
        assert estimate.hi == pytest.approx(2.0)
        assert estimate.margin == 0.05

    def test_constant_kernel(self, example2):
        kernel = KernelSpec(kind=KernelKindEnum.CONSTANT, value=0.6, support=EXAMPLE2_SUPPORT)
        samples = sample(example2, 40, 1)
        estimate = estimate_critical_region(degrees(build_similarity(samples, kernel)), samples.n)
        assert estimate.lo == estimate.hi == pytest.approx(0.6)

    def test_example2_region(self, example2, product_kernel):
        samples = sample(example2, 1000, 31)
        estimate = estimate_critical_region(degrees(build_similarity(samples, product_kernel)), samples.n)
        assert estimate.lo == pytest.approx(1.5, abs=0.1)
        assert estimate.hi == pytest.approx(3.0, abs=0.1)

    def test_within_kernel_bounds(self, mixture, gaussian_kernel):
        samples = sample(mixture, 150, 12)
        estimate = estimate_critical_region(degrees(build_similarity(samples, gaussian_kernel)), samples.n)
        assert gaussian_kernel.lower_bound <= estimate.lo <= estimate.hi <= gaussian_kernel.upper_bound

    def test_normalized_region_is_essential_value(self):
        estimate = estimate_critical_region(DegreeVector(values=[2.0, 4.0, 6.0]), 3, 0.05, LaplacianKindEnum.SYM_NORM)
        assert estimate.lo == estimate.hi == 1.0
        assert estimate.laplacian == LaplacianKindEnum.SYM_NORM
        assert estimate.status(0.9963) == EigenvalueStatusEnum.SAFE
        assert estimate.status(1.0) == EigenvalueStatusEnum.INSIDE

    def test_default_region_is_unnormalized(self):
        estimate = estimate_critical_region(DegreeVector(values=[2.0, 4.0]), 2)
        assert estimate.laplacian == LaplacianKindEnum.UNNORM_SCALED

    def test_negative_margin(self):
        with pytest.raises(ArgumentError):
            estimate_critical_region(DegreeVector(values=[1.0, 2.0]), 2, -0.1)


class TestClassification:
    @pytest.mark.parametrize(
        "eigenvalue, status",
        [
            (0.01, EigenvalueStatusEnum.SAFE),
            (1.45, EigenvalueStatusEnum.MARGINAL),
            (2.0, EigenvalueStatusEnum.INSIDE),
            (1.5, EigenvalueStatusEnum.INSIDE),
            (3.05, EigenvalueStatusEnum.MARGINAL),
            (3.2, EigenvalueStatusEnum.SAFE),
        ],
    )
    def test_status(self, region, eigenvalue, status):
        assert region.status(eigenvalue) == status

    def test_report(self, region):
        system = EigenSystem(
            eigenvalues=[0.0, 0.01, 1.45, 2.0], eigenvectors=np.eye(4), degenerate=(False,) * 4
        )
        report = classify_eigenvalues(system, region)
        assert [record.status for record in report.records] == [
            EigenvalueStatusEnum.SAFE,
            EigenvalueStatusEnum.SAFE,
            EigenvalueStatusEnum.MARGINAL,
            EigenvalueStatusEnum.INSIDE,
        ]
        assert [record.index for record in report.records] == [1, 2, 3, 4]
        assert all(record.ipr == 1.0 for record in report.records)
        assert count_below_region(report) == 2
        assert report.model_dump(mode="json")["records"][2]["status"] == "marginal"

    def test_scores_given_vectors(self, region):
        system = EigenSystem(eigenvalues=[0.0, 2.0], eigenvectors=np.eye(2), degenerate=(False, False))
        flat = np.full((2, 2), np.sqrt(0.5))
        report = classify_eigenvalues(system, region, flat)
        assert [record.ipr for record in report.records] == [pytest.approx(0.5)] * 2

    def test_vector_count_mismatch(self, region):
        system = EigenSystem(eigenvalues=[0.0, 2.0], eigenvectors=np.eye(2), degenerate=(False, False))
        with pytest.raises(ArgumentError):
            classify_eigenvalues(system, region, np.eye(2)[:, :1])

    def test_trivial_eigenvalue_is_safe_even_in_degenerate_region(self):
        system = EigenSystem(eigenvalues=[0.0, 0.0], eigenvectors=np.eye(2), degenerate=(True, True))
        report = classify_eigenvalues(system, CriticalRegion(lo=0.0, hi=0.0, margin=0.05))
        assert report.records[0].status == EigenvalueStatusEnum.SAFE
        assert report.records[1].status == EigenvalueStatusEnum.INSIDE

    def test_larger_margin_never_relaxes_status(self):
        values = np.linspace(0.0, 4.5, 451)
        margins = (0.0, 0.05, 0.1, 0.5)
        for small, large in zip(margins[:-1], margins[1:]):
            narrow = CriticalRegion(lo=1.5, hi=3.0, margin=small)
            wide = CriticalRegion(lo=1.5, hi=3.0, margin=large)
            for value in values:
                if narrow.status(value) != EigenvalueStatusEnum.SAFE:
                    assert wide.status(value) != EigenvalueStatusEnum.SAFE


class TestDiagnoseLaplacian:
    def test_normalized_scores_random_walk_vectors(self, mixture, gaussian_kernel):
        samples = sample(mixture, 80, 3)
        laplacian = build_laplacian(build_similarity(samples, gaussian_kernel), LaplacianKindEnum.SYM_NORM)
        system = eig_sym(laplacian.entries, 6)
        report, vectors = diagnose_laplacian(laplacian, system, 0.05)

        assert report.region.lo == report.region.hi == 1.0
        for index in range(system.r):
            expected = rw_from_sym(system.vector(index), laplacian.degrees)
            np.testing.assert_allclose(vectors[:, index], expected)
            assert report.records[index].ipr == ipr(vectors[:, index])
        assert all(record.status != EigenvalueStatusEnum.INSIDE for record in report.records[1:4])

    def test_unnormalized_keeps_eigenvectors(self, mixture, gaussian_kernel):
        samples = sample(mixture, 80, 3)
        similarity = build_similarity(samples, gaussian_kernel)
        laplacian = build_laplacian(similarity, LaplacianKindEnum.UNNORM_SCALED)
        system = eig_sym(laplacian.entries, 6)
        report, vectors = diagnose_laplacian(laplacian, system, 0.05)

        assert report.region == estimate_critical_region(degrees(similarity), samples.n, 0.05)
        assert vectors is system.eigenvectors


class TestIpr:
    @pytest.mark.parametrize("n", [1, 5, 100])
    def test_dirac(self, n):
        v = np.zeros(n)
        v[0] = 1.0
        assert ipr(v) == 1.0

    @pytest.mark.parametrize("n", [4, 50, 1000])
    def test_flat(self, n):
        assert ipr(np.full(n, 1.0 / np.sqrt(n))) == pytest.approx(1.0 / n)

    def test_two_sites(self):
        assert ipr(np.array([np.sqrt(0.5), np.sqrt(0.5), 0.0, 0.0])) == pytest.approx(0.5)

    def test_bounds_on_random_vectors(self, rng):
        for n in (3, 30, 300):
            for _ in range(20):
                v = rng.normal(size=n)
                v /= np.linalg.norm(v)
                assert 1.0 / n - 1e-12 <= ipr(v) <= 1.0

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnitVectorError):
            ipr(np.array([1.0, 1.0]))
