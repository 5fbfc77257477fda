# =============================================================
# Seeded Tensor Generators
# =============================================================

# -------------------------
# Generator Kind Constants
# -------------------------
GEN_DIAGONAL_POSITIVE = "diagonal-positive"
GEN_IDENTITY_PERTURBATION = "identity-plus-perturbation"
GEN_SYMMETRIC_GAUSSIAN = "symmetric-gaussian"
GEN_DIAGONALLY_DOMINANT = "diagonally-dominant"
GEN_IDENTITY = "identity"

# -------------------------
# DRF Choice Tuples
# -------------------------
GENERATOR_CHOICES = [
    (GEN_DIAGONAL_POSITIVE, "Diagonal, diagonal uniform in [low, high]"),
    (GEN_IDENTITY_PERTURBATION, "Unit tensor plus perturbation of row-abs-sum eps"),
    (GEN_SYMMETRIC_GAUSSIAN, "Symmetrized Gaussian entries"),
    (GEN_DIAGONALLY_DOMINANT, "Positive diagonal dominating each row"),
    (GEN_IDENTITY, "Unit tensor"),
]
