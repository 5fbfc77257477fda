# =============================================================
# Pytest: EigenService
# =============================================================

import numpy as np
import pytest
from numpy.testing import assert_allclose

# =============================================================
# Local Models & Services
# =============================================================
from tensors.models import EigConfig, Tensor
from tensors.services.algebra import GeneratorService, TensorService
from tensors.services.spectra import EigenService

# =============================================================
# Core
# =============================================================
from core.constants import EIG_KIND_H, EIG_KIND_Z, NORMALIZATION_TOL
from core.exceptions import ValidationException


def _values(pairs):
    return [pair.lam for pair in pairs]


def _distinct(values, decimals=8):
    return sorted({round(v, decimals) for v in values})


# =============================================================
# Test Case 1: Closed Forms (n = 1, m = 2)
# =============================================================
def test_one_dimensional_h_pair():
    A = Tensor.from_entries(4, 1, [5.0])
    pairs = EigenService.h_eigenpairs(A)

    assert _values(pairs) == [5.0]
    assert pairs[0].x.tolist() == [1.0]


def test_one_dimensional_z_pairs_depend_on_parity():
    # Step 1 — Even m: x = -1 is the same pair up to sign
    even = EigenService.z_eigenpairs(Tensor.from_entries(4, 1, [5.0]))
    assert _values(even) == [5.0]

    # Step 2 — Odd m: x = -1 carries lam = -a
    odd = EigenService.z_eigenpairs(Tensor.from_entries(3, 1, [5.0]))
    assert _values(odd) == [-5.0, 5.0]


def test_matrix_pairs(matrix_2112):
    assert_allclose(_values(EigenService.h_eigenpairs(matrix_2112)), [1.0, 3.0], atol=1e-12)
    assert_allclose(_values(EigenService.z_eigenpairs(matrix_2112)), [1.0, 3.0], atol=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_matrix_path_matches_eigvalsh(seed):
    rng = np.random.default_rng(seed)
    M = rng.standard_normal((4, 4))
    M = (M + M.T) / 2
    A = Tensor.from_array(M)

    expected = np.linalg.eigvalsh(M)
    assert_allclose(_values(EigenService.h_eigenpairs(A)), expected, atol=1e-8)
    assert_allclose(_values(EigenService.z_eigenpairs(A)), expected, atol=1e-8)


# =============================================================
# Test Case 2: Angular Scan (n = 2)
# =============================================================
def test_diagonal_h_eigenvalues(diag_23):
    assert_allclose(_values(EigenService.h_eigenpairs(diag_23)), [2.0, 3.0], atol=1e-8)


def test_diagonal_z_eigenvalues(diag_23):
    # mixed pairs: x1^2 = 3/5, x2^2 = 2/5, lam = 2 x1^4 + 3 x2^4 = 1.2
    values = _values(EigenService.z_eigenpairs(diag_23))
    assert _distinct(values) == [1.2, 2.0, 3.0]
    assert min(values) == pytest.approx(1.2, abs=1e-8)


def test_unit_tensor_continuum_is_handled(unit_tensor):
    A = unit_tensor(4, 2)
    assert EigenService.smallest_h(A) == pytest.approx(1.0, abs=1e-9)
    assert EigenService.smallest_z(A) == pytest.approx(0.5, abs=1e-9)


def test_smallest_pair_returns_sorted_head(diag_23):
    pair = EigenService.smallest_pair(diag_23, EIG_KIND_H)

    assert pair.lam == pytest.approx(2.0)
    assert_allclose(np.abs(pair.x), [1.0, 0.0], atol=1e-9)


def test_h_eigenvalues_scale_with_tensor():
    # Step 1 — A random symmetric instance and a positive multiple
    A = GeneratorService.gen_random("symmetric-gaussian", 4, 2, seed=3)
    scaled = Tensor.from_array(2.5 * A.data)

    # Step 2 — Spectra scale by the same factor
    base = _values(EigenService.h_eigenpairs(A))
    assert base
    assert_allclose(_values(EigenService.h_eigenpairs(scaled)), 2.5 * np.array(base), atol=1e-7)


@pytest.mark.parametrize("seed", range(5))
def test_newton_recovers_every_scanned_z_eigenvalue(seed):
    A = GeneratorService.gen_random("symmetric-gaussian", 4, 2, seed=seed)
    scanned = _values(EigenService.z_eigenpairs(A, EigConfig(method="scan")))
    newton = _values(EigenService.z_eigenpairs(A, EigConfig(method="newton")))

    for lam in scanned:
        assert min(abs(lam - other) for other in newton) <= 1e-6


# =============================================================
# Test Case 3: Multi-start Newton (n >= 3)
# =============================================================
def test_newton_on_diagonal_tensor():
    A = TensorService.diagonal_tensor(4, [1.0, 2.0, 3.0])

    assert EigenService.smallest_h(A) == pytest.approx(1.0, abs=1e-9)
    # all-mixed Z-pair: x_i^2 = lam / d_i, lam = 1 / sum(1 / d_i)
    assert EigenService.smallest_z(A) == pytest.approx(6.0 / 11.0, abs=1e-8)


def test_newton_on_unit_tensor(unit_tensor):
    assert EigenService.smallest_h(unit_tensor(4, 3)) == pytest.approx(1.0, abs=1e-9)


# =============================================================
# Test Case 4: Soundness of Returned Pairs
# =============================================================
@pytest.mark.parametrize(
    "kind, m, n",
    [(EIG_KIND_H, 4, 2), (EIG_KIND_Z, 4, 2), (EIG_KIND_H, 3, 2), (EIG_KIND_Z, 3, 3), (EIG_KIND_H, 4, 3)],
)
def test_every_pair_satisfies_its_equation(kind, m, n):
    A = GeneratorService.gen_random("symmetric-gaussian", m, n, seed=11)
    cfg = EigConfig()

    for pair in EigenService.eigenpairs(A, kind, cfg):
        assert EigenService.residual(A, kind, pair.lam, pair.x) <= cfg.residual_tol
        if kind == EIG_KIND_Z:
            assert abs(np.linalg.norm(pair.x) - 1.0) <= NORMALIZATION_TOL
        else:
            assert np.max(np.abs(pair.x)) == pytest.approx(1.0)


def test_returned_vectors_are_read_only(diag_23):
    pair = EigenService.smallest_pair(diag_23, EIG_KIND_Z)
    with pytest.raises(ValueError):
        pair.x[0] = 2.0


def test_p_tensor_h_spectrum_is_positive(p_fixture):
    # Gershgorin at the max-modulus coordinate: lam >= 1 - eps
    for seed in range(3):
        A = p_fixture(seed)
        assert EigenService.smallest_h(A) >= 0.9 - 1e-9


@pytest.mark.parametrize("seed", range(2))
def test_p_fixture_spectra_are_positive_on_every_subtensor(p_fixture, seed):
    A = p_fixture(seed, n=3)
    for J in TensorService.subsets(A.dim):
        sub = TensorService.principal_subtensor(A, J)
        for kind in (EIG_KIND_H, EIG_KIND_Z):
            values = _values(EigenService.eigenpairs(sub, kind))
            assert all(lam > 0.0 for lam in values), f"{kind} {J}: {values}"


# =============================================================
# Test Case 5: Certification and Errors
# =============================================================
def test_is_certified():
    assert EigenService.is_certified(Tensor.from_entries(4, 1, [1.0]))
    assert EigenService.is_certified(TensorService.unit_tensor(2, 5))
    assert EigenService.is_certified(TensorService.unit_tensor(4, 2))
    assert not EigenService.is_certified(TensorService.unit_tensor(4, 3))
    assert not EigenService.is_certified(TensorService.unit_tensor(4, 2), EigConfig(method="newton"))


def test_unknown_kind_is_rejected(diag_23):
    with pytest.raises(ValidationException):
        EigenService.eigenpairs(diag_23, "Q")


def test_scan_refuses_three_dimensions(unit_tensor):
    with pytest.raises(ValidationException):
        EigenService.h_eigenpairs(unit_tensor(4, 3), EigConfig(method="scan"))


def test_bad_config_is_rejected():
    with pytest.raises(ValidationException):
        EigConfig(residual_tol=0.0)
