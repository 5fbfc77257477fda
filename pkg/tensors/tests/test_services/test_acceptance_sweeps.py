# =============================================================
# Pytest: Full-size Property Sweeps (run with -m acceptance)
# =============================================================

import numpy as np
import pytest

# =============================================================
# Local Models & Services
# =============================================================
from tensors.models import AlphaConfig, BoundsConfig, EigConfig, TcpInstance, Tensor
from tensors.services.algebra import SHIFT_BY_UNIT, GeneratorService, TensorService
from tensors.services.alpha import AlphaService
from tensors.services.classification import ClassificationService
from tensors.services.spectra import EigenService, SpectralService
from tensors.services.tcp import TcpService
from tensors.services.workbench import BoundsService

# =============================================================
# Core
# =============================================================
from core.constants import NOT_P_STATUSES, STATUS_P, WITNESS_TOL

pytestmark = pytest.mark.acceptance

GRID = AlphaConfig(grid_resolution=0.02)


def _p_fixtures(count):
    for seed in range(count):
        n = 2 + seed % 2
        yield seed, GeneratorService.gen_random("identity-plus-perturbation", 4, n, seed, {"eps": 0.1})


# =============================================================
# Sweep 1: Unit Tensor Closed Forms
# =============================================================
@pytest.mark.parametrize("m", [2, 4])
@pytest.mark.parametrize("n", [2, 3])
def test_unit_tensor_alphas(m, n):
    I = TensorService.unit_tensor(m, n)

    assert AlphaService.alpha_t(I, GRID).value == pytest.approx(n ** ((2 - m) / 2), abs=1e-4)
    assert AlphaService.alpha_f(I, GRID).value == pytest.approx(1.0, abs=1e-6)


# =============================================================
# Sweep 2: Diagonal Oracle
# =============================================================
def test_delta_h_of_diagonal_tensors_is_min_diagonal():
    for seed in range(20):
        A = GeneratorService.gen_random("diagonal-positive", 4, 2 + seed % 2, seed)
        assert SpectralService.delta_h(A).delta_h == pytest.approx(A.diagonal().min(), abs=1e-6)


# =============================================================
# Sweep 3: Bound Chains, Monotonicity and Norm Bounds
# =============================================================
def test_bounds_hold_on_p_fixtures():
    cfg = BoundsConfig(eig=EigConfig(), alpha=AlphaConfig(grid_resolution=0.05), norm_samples=1000)
    for seed, A in _p_fixtures(100):
        # Step 1 — No violation beyond the certification gap
        report = BoundsService.verify_bounds(A, cfg, seed=seed)
        assert report.violations() == [], f"seed {seed}"

        # Step 2 — Monotonicity to 1e-6 and sampled norms to 1e-10, no gap slack
        for item in report.outcomes:
            if item.name.startswith(("alpha_t <= alpha_t[", "alpha_f <= alpha_f[")):
                assert item.margin >= -1e-6, f"seed {seed}: {item.name}"
            if item.name.startswith("sampled"):
                assert item.margin >= -1e-10, f"seed {seed}: {item.name}"


# =============================================================
# Sweep 4: Classification Consistency
# =============================================================
def test_classify_and_witness_search_agree():
    for seed, A in _p_fixtures(100):
        # Step 1 — P fixture: positive verdict, nothing to witness
        assert ClassificationService.classify(A, GRID).status == STATUS_P
        assert ClassificationService.witness_search(A, GRID) is None

        # Step 2 — Negated diagonal entry: verified witness
        data = A.data.copy()
        data[(0,) * A.order] *= -1
        B = Tensor.from_array(data)
        verdict = ClassificationService.classify(B, GRID)
        assert verdict.status in NOT_P_STATUSES
        assert ClassificationService.witness_value(B, verdict.witness) <= WITNESS_TOL


def test_shift_past_delta_h_is_witnessed():
    for seed, A in _p_fixtures(20):
        report = SpectralService.delta_h(A)
        B = TensorService.shifted(A, report.delta_h + 1e-3, by=SHIFT_BY_UNIT)
        verdict = ClassificationService.classify(B, GRID, hints=[report.witness_h])

        assert verdict.status in NOT_P_STATUSES
        assert verdict.witness_value <= WITNESS_TOL


# =============================================================
# Sweep 5: Tensor Complementarity
# =============================================================
def test_tcp_converges_on_p_fixtures():
    rng = np.random.default_rng(0)
    for seed, A in _p_fixtures(50):
        for _ in range(20):
            q = rng.standard_normal(A.dim)
            solution = TcpService.solve_tcp(TcpInstance(tensor=A, q=q))
            assert solution.converged, f"seed {seed}, q {q}"
            assert solution.residual <= 1e-10
            if q.min() >= 0:
                assert np.max(np.abs(solution.x)) <= 1e-8


@pytest.mark.parametrize("scale", [0.1, 1.0, 10.0])
def test_tcp_converges_on_diagonally_dominant_fixtures(scale):
    rng = np.random.default_rng(2)
    for seed in range(50):
        A = GeneratorService.gen_random("diagonally-dominant", 4, 2 + seed % 2, seed)
        for _ in range(20):
            q = scale * rng.standard_normal(A.dim)
            solution = TcpService.solve_tcp(TcpInstance(tensor=A, q=q))
            assert solution.converged, f"seed {seed}, q {q}"
            assert solution.residual <= 1e-10


def test_matrix_tcp_matches_enumeration():
    rng = np.random.default_rng(1)
    for _ in range(50):
        n = int(rng.integers(1, 4))
        B = rng.standard_normal((n, n))
        inst = TcpInstance(tensor=Tensor.from_array(B @ B.T + np.eye(n)), q=rng.standard_normal(n))
        oracle = TcpService.enumerate_lcp(inst)
        np.testing.assert_allclose(TcpService.solve_tcp(inst).x, oracle[0], atol=1e-8)


# =============================================================
# Sweep 6: Eigensolver Soundness
# =============================================================
def test_matrix_spectra_match_eigvalsh():
    rng = np.random.default_rng(2)
    for _ in range(50):
        M = rng.standard_normal((4, 4))
        M = (M + M.T) / 2
        values = [pair.lam for pair in EigenService.h_eigenpairs(Tensor.from_array(M))]
        np.testing.assert_allclose(values, np.linalg.eigvalsh(M), atol=1e-8)


@pytest.mark.parametrize("kind", ["H", "Z"])
def test_newton_matches_scan_at_n2(kind):
    for seed in range(25):
        A = GeneratorService.gen_random("symmetric-gaussian", 4, 2, seed)
        scanned = [p.lam for p in EigenService.eigenpairs(A, kind, EigConfig(method="scan"))]
        newton = [p.lam for p in EigenService.eigenpairs(A, kind, EigConfig(method="newton"))]
        for lam in scanned:
            assert min(abs(lam - other) for other in newton) <= 1e-6, f"seed {seed}"


def test_p_fixture_spectra_are_positive_on_every_subtensor():
    for seed, A in _p_fixtures(20):
        for J in TensorService.subsets(A.dim):
            sub = TensorService.principal_subtensor(A, J)
            for kind in ("H", "Z"):
                values = [p.lam for p in EigenService.eigenpairs(sub, kind)]
                assert all(lam > 0.0 for lam in values), f"seed {seed}, {kind} {J}"


# =============================================================
# Sweep 7: Sub-tensors and Search Agreement
# =============================================================
def test_principal_subtensors_of_p_fixtures_are_p():
    for seed, A in _p_fixtures(100):
        for J in TensorService.subsets(A.dim):
            sub = TensorService.principal_subtensor(A, J)
            assert ClassificationService.classify(sub, GRID).status == STATUS_P, f"seed {seed}, {J}"


def test_heuristic_agrees_with_fine_grid():
    fine = AlphaConfig(grid_resolution=0.005)
    heuristic = AlphaConfig(mode="heuristic")
    for seed, A in _p_fixtures(20):
        for alpha in (AlphaService.alpha_t, AlphaService.alpha_f):
            assert abs(alpha(A, heuristic).value - alpha(A, fine).value) <= 5e-3, f"seed {seed}"
