# =============================================================
# Eigenvalue Kinds & Solver Methods
# =============================================================

# -------------------------
# Eigenpair Kind Constants
# -------------------------
EIG_KIND_H = "H"
EIG_KIND_Z = "Z"

# -------------------------
# Solver Method Constants
# -------------------------
EIG_METHOD_AUTO = "auto"
EIG_METHOD_SCAN = "scan"
EIG_METHOD_NEWTON = "newton"

# -------------------------
# DRF Choice Tuples
# -------------------------
EIG_KIND_CHOICES = [
    (EIG_KIND_H, "H-eigenvalue"),
    (EIG_KIND_Z, "Z-eigenvalue"),
]

EIG_METHOD_CHOICES = [
    (EIG_METHOD_AUTO, "Closed form / scan / Newton by size"),
    (EIG_METHOD_SCAN, "Angular scan (n <= 2)"),
    (EIG_METHOD_NEWTON, "Multi-start Newton"),
]

# Largest dimension whose eigen-solve is exhaustive (n = 1 closed form, n = 2 scan)
CERTIFIED_EIG_MAX_DIM = 2
