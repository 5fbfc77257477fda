# constants/__init__.py
from .spectra import (
    EIG_KIND_H,
    EIG_KIND_Z,
    EIG_KIND_CHOICES,
    EIG_METHOD_AUTO,
    EIG_METHOD_SCAN,
    EIG_METHOD_NEWTON,
    EIG_METHOD_CHOICES,
    CERTIFIED_EIG_MAX_DIM,
)
from .alpha import (
    OP_T,
    OP_F,
    OP_CHOICES,
    MODE_GRID,
    MODE_HEURISTIC,
    MODE_CHOICES,
    CERT_GRID,
    CERT_CERTIFIED,
    CERT_HEURISTIC,
    GRID_MAX_DIM,
)
from .verdicts import (
    STATUS_P,
    STATUS_P0_NOT_P,
    STATUS_NOT_P0,
    STATUS_UNDETERMINED,
    STATUS_CHOICES,
    NOT_P_STATUSES,
    OUTCOME_HOLDS,
    OUTCOME_HOLDS_WITHIN_GAP,
    OUTCOME_VIOLATED,
    OUTCOME_NOT_APPLICABLE,
    OUTCOME_CHOICES,
)
from .generators import (
    GEN_DIAGONAL_POSITIVE,
    GEN_IDENTITY_PERTURBATION,
    GEN_SYMMETRIC_GAUSSIAN,
    GEN_DIAGONALLY_DOMINANT,
    GEN_IDENTITY,
    GENERATOR_CHOICES,
)
from .numerics import (
    ZERO_VECTOR_TOL,
    NORMALIZATION_TOL,
    WITNESS_TOL,
    BATCH_CHUNK_ENTRIES,
    TCP_MIN_MAP,
    TCP_FISCHER_BURMEISTER,
    TCP_REFORMULATIONS,
)
