# =============================================================
# Shared Numerical Thresholds
# =============================================================

# A vector with max-norm below this is treated as zero before normalisation
ZERO_VECTOR_TOL = 1e-8

# |‖x‖ − 1| allowed on returned unit vectors
NORMALIZATION_TOL = 1e-12

# max_i x_i (A x^{m-1})_i at or below this counts as a "not P" witness
WITNESS_TOL = 1e-9

# Rows of work per vectorised contraction chunk
BATCH_CHUNK_ENTRIES = 2_000_000

# Nonsmooth reformulations of min(x, w) = 0 tried by the TCP solver, in order
TCP_MIN_MAP = "min-map"
TCP_FISCHER_BURMEISTER = "fischer-burmeister"
TCP_REFORMULATIONS = (TCP_MIN_MAP, TCP_FISCHER_BURMEISTER)
