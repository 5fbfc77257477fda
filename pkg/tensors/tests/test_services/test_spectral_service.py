# =============================================================
# Pytest: SpectralService
# =============================================================

import numpy as np
import pytest
from numpy.testing import assert_allclose

# =============================================================
# Local Models & Services
# =============================================================
from tensors.models import SubsetIndex, Tensor
from tensors.services.algebra import GeneratorService
from tensors.services.spectra import SpectralService


# =============================================================
# Test Case 1: Closed-form Instances
# =============================================================
def test_diagonal_delta_h(diag_23):
    report = SpectralService.delta_h(diag_23)

    assert report.delta_h == pytest.approx(2.0, abs=1e-8)
    assert report.argmin_subset_h == SubsetIndex(members=(1,))
    assert_allclose(report.witness_h, [1.0, 0.0], atol=1e-12)
    assert report.delta_z is None


def test_diagonal_delta_z(diag_23):
    report = SpectralService.delta_z(diag_23)

    assert report.delta_z == pytest.approx(1.2, abs=1e-8)
    assert report.argmin_subset_z == SubsetIndex(members=(1, 2))
    assert np.linalg.norm(report.witness_z) == pytest.approx(1.0)


def test_unit_tensor_delta_h(unit_tensor):
    assert SpectralService.delta_h(unit_tensor(4, 3)).delta_h == pytest.approx(1.0, abs=1e-8)


def test_matrix_deltas(matrix_2112):
    report = SpectralService.spectral_report(matrix_2112)

    # singletons give 2, the full matrix gives 1
    assert report.delta_h == pytest.approx(1.0, abs=1e-10)
    assert report.delta_z == pytest.approx(1.0, abs=1e-10)
    assert report.argmin_subset_h == SubsetIndex.full(2)


# =============================================================
# Test Case 2: Report Structure
# =============================================================
def test_report_lists_every_subset():
    A = GeneratorService.gen_random("symmetric-gaussian", 4, 3, seed=2)
    report = SpectralService.spectral_report(A)

    assert len(report.per_subset) == 2 ** 3 - 1
    assert [entry.subset for entry in report.per_subset][:3] == [
        SubsetIndex(members=(1,)),
        SubsetIndex(members=(2,)),
        SubsetIndex(members=(3,)),
    ]


def test_delta_never_exceeds_smallest_diagonal():
    # singletons contribute a_{i..i}
    for seed in range(3):
        A = GeneratorService.gen_random("symmetric-gaussian", 4, 2, seed=seed)
        report = SpectralService.spectral_report(A)
        assert report.delta_h <= A.diagonal().min() + 1e-12
        assert report.delta_z <= A.diagonal().min() + 1e-12


def test_delta_is_the_minimum_over_subsets():
    A = GeneratorService.gen_random("symmetric-gaussian", 4, 2, seed=5)
    report = SpectralService.spectral_report(A)

    per_subset = [entry.smallest_h for entry in report.per_subset if entry.smallest_h is not None]
    assert report.delta_h == min(per_subset)


def test_certification_follows_subset_sizes(diag_23, unit_tensor):
    assert SpectralService.delta_h(diag_23).certified
    assert not SpectralService.delta_h(unit_tensor(4, 3)).certified


def test_one_dimensional_tensor():
    report = SpectralService.spectral_report(Tensor.from_entries(4, 1, [-3.0]))

    assert report.delta_h == -3.0
    assert report.delta_z == -3.0
    assert report.witness_h.tolist() == [1.0]
