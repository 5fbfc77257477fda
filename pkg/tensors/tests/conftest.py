# ==========================================================
# conftest.py — Pytest Global Fixtures
# ==========================================================
import json

import numpy as np
import pytest

# ==========================================================
# Local Models & Services
# ==========================================================
from tensors.models import AlphaConfig, BoundsConfig, EigConfig, Tensor
from tensors.services.algebra import GeneratorService, TensorService

# ==========================================================
# Fixture: Tensor Builders
# ==========================================================
@pytest.fixture
def unit_tensor():
    return TensorService.unit_tensor


@pytest.fixture
def diagonal_tensor():
    return TensorService.diagonal_tensor


@pytest.fixture
def matrix():
    def build(rows):
        return Tensor.from_array(np.array(rows, dtype=float))
    return build


@pytest.fixture
def diag_23():
    # m = 4, d = (2, 3)
    return TensorService.diagonal_tensor(4, [2.0, 3.0])


@pytest.fixture
def matrix_2112():
    return Tensor.from_array(np.array([[2.0, 1.0], [1.0, 2.0]]))


# ==========================================================
# Fixture: Known-P Instances
# ==========================================================
@pytest.fixture
def p_fixture():
    """Even-order P-tensors: the unit tensor plus a perturbation of row-sum 0.1."""
    def build(seed, n=2, m=4, eps=0.1):
        return GeneratorService.gen_random("identity-plus-perturbation", m, n, seed, {"eps": eps})
    return build


# ==========================================================
# Fixture: Config Records
# ==========================================================
@pytest.fixture
def eig_cfg():
    return EigConfig()


@pytest.fixture
def grid_cfg():
    return AlphaConfig(mode="grid-certified", grid_resolution=0.02)


@pytest.fixture
def heuristic_cfg():
    return AlphaConfig(mode="heuristic", starts=300)


@pytest.fixture
def bounds_cfg():
    return BoundsConfig(
        eig=EigConfig(),
        alpha=AlphaConfig(grid_resolution=0.05),
        norm_samples=200,
    )


# ==========================================================
# Fixture: Files
# ==========================================================
@pytest.fixture
def write_file(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return path
    return write


@pytest.fixture
def tensor_file(write_file):
    def write(A: Tensor, name="tensor.json"):
        return write_file(name, {"m": A.order, "n": A.dim, "entries": A.entries.tolist()})
    return write
