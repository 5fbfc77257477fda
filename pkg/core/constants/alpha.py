# =============================================================
# Operator Kinds, Search Modes & Certification Levels
# =============================================================

# -------------------------
# Operator Constants
# -------------------------
OP_T = "T"
OP_F = "F"

# -------------------------
# Search Mode Constants
# -------------------------
MODE_GRID = "grid-certified"
MODE_HEURISTIC = "heuristic"

# -------------------------
# Certification Constants
# -------------------------
CERT_GRID = "grid-certified"
CERT_CERTIFIED = "certified"
CERT_HEURISTIC = "heuristic"

# -------------------------
# DRF Choice Tuples
# -------------------------
OP_CHOICES = [
    (OP_T, "T_A(x) = |x|_2^(2-m) A x^(m-1)"),
    (OP_F, "F_A(x) = (A x^(m-1))^[1/(m-1)]"),
]

MODE_CHOICES = [
    (MODE_GRID, "Face grid + local refinement"),
    (MODE_HEURISTIC, "Multi-start local refinement"),
]

# Largest dimension the face grid is run for
GRID_MAX_DIM = 3
