from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from core.constants import (
    CERT_HEURISTIC,
    OUTCOME_NOT_APPLICABLE,
    OUTCOME_VIOLATED,
)
from tensors.models.tensor import SubsetIndex, Tensor, as_vector
from core.exceptions import ValidationException


# =============================================================
# Eigenpairs & Spectral Constants
# =============================================================
@dataclass(frozen=True, eq=False)
class Eigenpair:
    kind: str
    lam: float
    x: np.ndarray
    residual: float


@dataclass(frozen=True)
class SubsetSpectrum:
    subset: SubsetIndex
    smallest_h: Optional[float] = None
    smallest_z: Optional[float] = None
    certified: bool = True


@dataclass(frozen=True, eq=False)
class DeltaReport:
    """
    Minimum smallest H-/Z-eigenvalue over all principal sub-tensors.

    `witness_h` / `witness_z` are the eigenvectors of the minimising
    subset, padded with zeros to the full dimension.
    """

    dim: int
    per_subset: tuple[SubsetSpectrum, ...]
    delta_h: Optional[float] = None
    delta_z: Optional[float] = None
    argmin_subset_h: Optional[SubsetIndex] = None
    argmin_subset_z: Optional[SubsetIndex] = None
    witness_h: Optional[np.ndarray] = None
    witness_z: Optional[np.ndarray] = None

    @property
    def certified(self) -> bool:
        return all(entry.certified for entry in self.per_subset)


# =============================================================
# Alpha Quantities
# =============================================================
@dataclass(frozen=True, eq=False)
class AlphaResult:
    value: float
    minimizer: np.ndarray
    objective_kind: str
    certification: str = CERT_HEURISTIC
    grid_resolution: Optional[float] = None
    grid_gap: Optional[float] = None

    @property
    def lower_bound(self) -> Optional[float]:
        if self.grid_gap is None:
            return None
        return self.value - self.grid_gap


# =============================================================
# P-Classification
# =============================================================
@dataclass(frozen=True, eq=False)
class PVerdict:
    status: str
    alpha_t_value: float
    certification: str
    witness: Optional[np.ndarray] = None
    witness_value: Optional[float] = None
    alpha_f_value: Optional[float] = None
    diag_violations: tuple[int, ...] = ()
    note: str = ""


@dataclass(frozen=True, eq=False)
class ShiftWitness:
    """
    Not-P certificate for B = A - delta_H I (kind H) or A - delta_Z E (kind Z):
    the padded minimising eigenvector y with max_i y_i (B y^{m-1})_i.
    """

    kind: str
    shift: float
    witness: np.ndarray
    value: float
    verified: bool


# =============================================================
# Tensor Complementarity
# =============================================================
@dataclass(frozen=True, eq=False)
class TcpInstance:
    tensor: Tensor
    q: np.ndarray

    def __post_init__(self):
        q = as_vector(self.q, name="q")
        if q.size != self.tensor.dim:
            raise ValidationException(
                f"q has length {q.size}, expected n = {self.tensor.dim}."
            )
        object.__setattr__(self, "q", q)


@dataclass(frozen=True, eq=False)
class TcpSolution:
    x: np.ndarray
    w: np.ndarray
    residual: float
    iterations: int
    converged: bool
    start_index: Optional[int] = None


# =============================================================
# Bound Verification
# =============================================================
@dataclass(frozen=True)
class InequalityOutcome:
    name: str
    outcome: str = OUTCOME_NOT_APPLICABLE
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    margin: Optional[float] = None
    gap: Optional[float] = None
    note: str = ""


@dataclass(frozen=True, eq=False)
class BoundReport:
    order: int
    dim: int
    alpha_t: Optional[AlphaResult]
    alpha_f: Optional[AlphaResult]
    delta_h: Optional[float]
    delta_z: Optional[float]
    min_diag: float
    row_sum_bound_t: float
    row_sum_bound_f: Optional[float]
    outcomes: tuple[InequalityOutcome, ...]
    certified: bool
    tightness_t: Optional[float] = None
    tightness_f: Optional[float] = None
    seed: Optional[int] = None

    def violations(self) -> list[InequalityOutcome]:
        return [item for item in self.outcomes if item.outcome == OUTCOME_VIOLATED]


@dataclass(frozen=True)
class SummaryStats:
    minimum: Optional[float] = None
    mean: Optional[float] = None
    maximum: Optional[float] = None
    count: int = 0


@dataclass(frozen=True, eq=False)
class BatchReport:
    generator: dict
    count: int
    reports: tuple[BoundReport, ...] = ()
    outcome_counts: dict = field(default_factory=dict)
    alpha_t_stats: SummaryStats = SummaryStats()
    alpha_f_stats: SummaryStats = SummaryStats()
    tightness_t_stats: SummaryStats = SummaryStats()
    tightness_f_stats: SummaryStats = SummaryStats()
