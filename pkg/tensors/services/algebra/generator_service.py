# =============================================================
# Third-Party
# =============================================================
import numpy as np

# =============================================================
# Core
# =============================================================
from core.constants import (
    GEN_DIAGONAL_POSITIVE,
    GEN_DIAGONALLY_DOMINANT,
    GEN_IDENTITY,
    GEN_IDENTITY_PERTURBATION,
    GEN_SYMMETRIC_GAUSSIAN,
    GENERATOR_CHOICES,
)
from core.exceptions import ValidationException

# =============================================================
# Local
# =============================================================
from tensors.models import Tensor
from tensors.services import BaseService, service_entry
from tensors.services.algebra.tensor_service import TensorService


# =============================================================
# Generator Service
# =============================================================
class GeneratorService(BaseService):
    """
    Seeded test-instance generators.

    P-property guarantees hold for even m only:
      - diagonal-positive: diagonal in [low, high] with low > 0.
      - identity-plus-perturbation: I + P with max row-abs-sum of P = eps < 1,
        so x_i (A x^{m-1})_i >= 1 - eps at any |x_i| = ||x||_inf = 1.
      - diagonally-dominant: a_{i..i} = (off-diagonal row-abs-sum) + margin.
    symmetric-gaussian carries no guarantee.
    """

    DEFAULT_PARAMS = {
        GEN_DIAGONAL_POSITIVE: {"low": 1.0, "high": 3.0},
        GEN_IDENTITY_PERTURBATION: {"eps": 0.1},
        GEN_SYMMETRIC_GAUSSIAN: {"scale": 1.0, "shift": 0.0},
        GEN_DIAGONALLY_DOMINANT: {"scale": 1.0, "margin_low": 0.5, "margin_high": 1.5},
        GEN_IDENTITY: {},
    }

    @classmethod
    def kinds(cls) -> list[str]:
        return [value for value, _ in GENERATOR_CHOICES]

    @classmethod
    def resolve_params(cls, kind: str, params: dict | None) -> dict:
        if kind not in cls.DEFAULT_PARAMS:
            raise ValidationException(f"Unknown generator kind '{kind}'.")
        resolved = dict(cls.DEFAULT_PARAMS[kind])
        unknown = set(params or {}) - set(resolved)
        if unknown:
            raise ValidationException(
                f"Generator '{kind}' does not take parameters {sorted(unknown)}."
            )
        resolved.update({k: float(v) for k, v in (params or {}).items()})
        return resolved

    # ---------------------------------------------------------
    # Entry Point
    # ---------------------------------------------------------
    @classmethod
    @service_entry("Tensor generation failed")
    def gen_random(cls, kind: str, m: int, n: int, seed: int, params: dict | None = None) -> Tensor:
        # Step 1 — Validate shape and parameters
        if m < 2 or n < 1:
            raise ValidationException("Generators need m >= 2 and n >= 1.")
        p = cls.resolve_params(kind, params)

        # Step 2 — Build from a dedicated seeded stream
        rng = np.random.default_rng(seed)
        builder = {
            GEN_DIAGONAL_POSITIVE: cls._diagonal_positive,
            GEN_IDENTITY_PERTURBATION: cls._identity_plus_perturbation,
            GEN_SYMMETRIC_GAUSSIAN: cls._symmetric_gaussian,
            GEN_DIAGONALLY_DOMINANT: cls._diagonally_dominant,
            GEN_IDENTITY: cls._identity,
        }[kind]
        tensor = builder(rng, m, n, p)

        cls.logger().debug(
            "Generated tensor",
            extra={"kind": kind, "m": m, "n": n, "seed": seed},
        )
        return tensor

    # ---------------------------------------------------------
    # Builders
    # ---------------------------------------------------------
    @classmethod
    def _diagonal_positive(cls, rng, m, n, p) -> Tensor:
        if not 0 < p["low"] <= p["high"]:
            raise ValidationException("diagonal-positive needs 0 < low <= high.")
        return TensorService.diagonal_tensor(m, rng.uniform(p["low"], p["high"], size=n))

    @classmethod
    def _identity_plus_perturbation(cls, rng, m, n, p) -> Tensor:
        eps = p["eps"]
        if not 0 <= eps < 1:
            raise ValidationException("identity-plus-perturbation needs 0 <= eps < 1.")

        unit = TensorService.unit_tensor(m, n)
        if eps == 0:
            return unit

        noise = rng.uniform(-1.0, 1.0, size=(n,) * m)
        row_max = np.abs(noise).reshape(n, -1).sum(axis=1).max()
        perturbation = noise * (eps / row_max)
        return Tensor.from_entries(m, n, (unit.data + perturbation).ravel())

    @classmethod
    def _symmetric_gaussian(cls, rng, m, n, p) -> Tensor:
        raw = Tensor.from_entries(m, n, rng.normal(0.0, p["scale"], size=n ** m))
        sym = TensorService.symmetrize(raw)
        if p["shift"]:
            return TensorService.shifted(sym, -p["shift"])
        return sym

    @classmethod
    def _diagonally_dominant(cls, rng, m, n, p) -> Tensor:
        if not 0 < p["margin_low"] <= p["margin_high"]:
            raise ValidationException("diagonally-dominant needs 0 < margin_low <= margin_high.")

        data = rng.uniform(-p["scale"], p["scale"], size=(n,) * m)
        idx = np.arange(n)
        data[(idx,) * m] = 0.0
        off = np.abs(data).reshape(n, -1).sum(axis=1)
        data[(idx,) * m] = off + rng.uniform(p["margin_low"], p["margin_high"], size=n)
        return Tensor.from_entries(m, n, data.ravel())

    @classmethod
    def _identity(cls, rng, m, n, p) -> Tensor:
        return TensorService.unit_tensor(m, n)
