from .tensor import Tensor, SubsetIndex, as_vector
from .configs import EigConfig, AlphaConfig, TcpConfig, BoundsConfig
from .results import (
    Eigenpair,
    SubsetSpectrum,
    DeltaReport,
    AlphaResult,
    PVerdict,
    ShiftWitness,
    TcpInstance,
    TcpSolution,
    InequalityOutcome,
    BoundReport,
    SummaryStats,
    BatchReport,
)

__all__ = [
    "Tensor",
    "SubsetIndex",
    "as_vector",
    "EigConfig",
    "AlphaConfig",
    "TcpConfig",
    "BoundsConfig",
    "Eigenpair",
    "SubsetSpectrum",
    "DeltaReport",
    "AlphaResult",
    "PVerdict",
    "ShiftWitness",
    "TcpInstance",
    "TcpSolution",
    "InequalityOutcome",
    "BoundReport",
    "SummaryStats",
    "BatchReport",
]
