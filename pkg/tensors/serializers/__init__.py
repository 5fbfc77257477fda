# =============================================================
# Import all serializers from individual modules
# =============================================================

from .fields import FiniteFloatField, VectorField, SubsetField
from .tensor import TensorSerializer
from .tcp import TcpInstanceSerializer
from .configs import (
    EigConfigSerializer,
    AlphaConfigSerializer,
    TcpConfigSerializer,
    BoundsConfigSerializer,
    GeneratorSpecSerializer,
)
from .results import (
    EigenpairSerializer,
    SubsetSpectrumSerializer,
    DeltaReportSerializer,
    AlphaResultSerializer,
    PVerdictSerializer,
    ShiftWitnessSerializer,
    TcpSolutionSerializer,
    InequalityOutcomeSerializer,
    BoundReportSerializer,
    SummaryStatsSerializer,
    BatchReportSerializer,
)

# =============================================================
# Explicitly define what is exported when importing *
# =============================================================
__all__ = [
    "FiniteFloatField",
    "VectorField",
    "SubsetField",
    "TensorSerializer",
    "TcpInstanceSerializer",
    "EigConfigSerializer",
    "AlphaConfigSerializer",
    "TcpConfigSerializer",
    "BoundsConfigSerializer",
    "GeneratorSpecSerializer",
    "EigenpairSerializer",
    "SubsetSpectrumSerializer",
    "DeltaReportSerializer",
    "AlphaResultSerializer",
    "PVerdictSerializer",
    "ShiftWitnessSerializer",
    "TcpSolutionSerializer",
    "InequalityOutcomeSerializer",
    "BoundReportSerializer",
    "SummaryStatsSerializer",
    "BatchReportSerializer",
]
