from __future__ import annotations

from dataclasses import dataclass, fields

from django.conf import settings

from core.constants import (
    EIG_METHOD_AUTO,
    EIG_METHOD_CHOICES,
    MODE_CHOICES,
    MODE_GRID,
)
from core.exceptions import ValidationException


# ----------------------
# Shared Helpers
# ----------------------
def _defaults() -> dict:
    return settings.TENSORLAB


def _require_positive(record, *names: str) -> None:
    for name in names:
        if not getattr(record, name) > 0:
            raise ValidationException(f"{type(record).__name__}.{name} must be positive.")


def _require_choice(record, name: str, choices) -> None:
    if getattr(record, name) not in {value for value, _ in choices}:
        raise ValidationException(f"{type(record).__name__}.{name} is not a valid choice.")


class _FromSettings:
    @classmethod
    def from_settings(cls, **overrides):
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            raise ValidationException(f"Unknown {cls.__name__} fields: {sorted(unknown)}")
        values = cls._settings_values()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class EigConfig(_FromSettings):
    residual_tol: float = 1e-9
    dedup_tol: float = 1e-6
    starts: int = 200
    max_newton_iters: int = 100
    seed: int = 0
    scan_resolution: float = 1e-4
    method: str = EIG_METHOD_AUTO

    def __post_init__(self):
        _require_positive(self, "residual_tol", "dedup_tol", "starts", "max_newton_iters", "scan_resolution")
        _require_choice(self, "method", EIG_METHOD_CHOICES)

    @classmethod
    def _settings_values(cls) -> dict:
        d = _defaults()
        return {
            "residual_tol": d["EIG_RESIDUAL_TOL"],
            "dedup_tol": d["EIG_DEDUP_TOL"],
            "starts": d["EIG_STARTS"],
            "max_newton_iters": d["EIG_MAX_NEWTON_ITERS"],
            "seed": d["SEED"],
            "scan_resolution": d["EIG_SCAN_RESOLUTION"],
        }


@dataclass(frozen=True)
class AlphaConfig(_FromSettings):
    mode: str = MODE_GRID
    grid_resolution: float = 0.02
    refine_iters: int = 200
    starts: int = 500
    seed: int = 0
    tol: float = 1e-8

    def __post_init__(self):
        _require_positive(self, "grid_resolution", "refine_iters", "starts", "tol")
        _require_choice(self, "mode", MODE_CHOICES)
        if self.grid_resolution > 2:
            raise ValidationException("AlphaConfig.grid_resolution must not exceed 2 (the face width).")

    @classmethod
    def _settings_values(cls) -> dict:
        d = _defaults()
        return {
            "grid_resolution": d["ALPHA_GRID_RESOLUTION"],
            "refine_iters": d["ALPHA_REFINE_ITERS"],
            "starts": d["ALPHA_STARTS"],
            "seed": d["SEED"],
            "tol": d["ALPHA_TOL"],
        }


@dataclass(frozen=True)
class TcpConfig(_FromSettings):
    tol: float = 1e-10
    max_iters: int = 200
    starts: int = 20
    seed: int = 0
    backtrack_factor: float = 0.5
    min_step: float = 2.0 ** -20
    sufficient_decrease: float = 1e-4

    def __post_init__(self):
        _require_positive(self, "tol", "max_iters", "starts", "min_step")
        if not 0 < self.backtrack_factor < 1:
            raise ValidationException("TcpConfig.backtrack_factor must lie in (0, 1).")
        if not 0 <= self.sufficient_decrease < 1:
            raise ValidationException("TcpConfig.sufficient_decrease must lie in [0, 1).")

    @classmethod
    def _settings_values(cls) -> dict:
        d = _defaults()
        return {
            "tol": d["TCP_TOL"],
            "max_iters": d["TCP_MAX_ITERS"],
            "starts": d["TCP_STARTS"],
            "seed": d["SEED"],
        }


@dataclass(frozen=True)
class BoundsConfig(_FromSettings):
    """
    Bundle handed to the bound-verification harness.
    """

    eig: EigConfig
    alpha: AlphaConfig
    norm_samples: int = 1000
    monotonicity_tol: float = 1e-6
    shift_epsilon: float = 1e-3
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        _require_positive(self, "norm_samples", "monotonicity_tol", "shift_epsilon", "workers")

    @classmethod
    def _settings_values(cls) -> dict:
        d = _defaults()
        return {
            "eig": EigConfig.from_settings(),
            "alpha": AlphaConfig.from_settings(),
            "seed": d["SEED"],
            "workers": d["BATCH_WORKERS"],
        }
