# =============================================================
# P-Classification Verdicts & Inequality Outcomes
# =============================================================

# -------------------------
# Verdict Constants
# -------------------------
STATUS_P = "P"
STATUS_P0_NOT_P = "P0-not-P"
STATUS_NOT_P0 = "not-P0"
STATUS_UNDETERMINED = "undetermined"

# -------------------------
# Inequality Outcome Constants
# -------------------------
OUTCOME_HOLDS = "holds"
OUTCOME_HOLDS_WITHIN_GAP = "holds-within-gap"
OUTCOME_VIOLATED = "violated"
OUTCOME_NOT_APPLICABLE = "not-applicable"

# -------------------------
# DRF Choice Tuples
# -------------------------
STATUS_CHOICES = [
    (STATUS_P, "P-tensor"),
    (STATUS_P0_NOT_P, "P0-tensor, not P"),
    (STATUS_NOT_P0, "Not a P0-tensor"),
    (STATUS_UNDETERMINED, "Undetermined within numerical gap"),
]

OUTCOME_CHOICES = [
    (OUTCOME_HOLDS, "Holds with margin beyond the gap"),
    (OUTCOME_HOLDS_WITHIN_GAP, "Holds within the certification gap"),
    (OUTCOME_VIOLATED, "Violated beyond the gap"),
    (OUTCOME_NOT_APPLICABLE, "An ingredient is missing"),
]

NOT_P_STATUSES = (STATUS_P0_NOT_P, STATUS_NOT_P0)
