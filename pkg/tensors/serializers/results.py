# =============================================================
# Django REST Framework
# =============================================================
from rest_framework import serializers

# =============================================================
# Constants
# =============================================================
from core.constants import (
    CERT_CERTIFIED,
    CERT_GRID,
    CERT_HEURISTIC,
    OP_CHOICES,
    OUTCOME_CHOICES,
    STATUS_CHOICES,
)

# =============================================================
# Local Application
# =============================================================
from tensors.serializers.fields import SubsetField, VectorField

CERTIFICATION_CHOICES = [
    (CERT_GRID, "Grid-certified"),
    (CERT_CERTIFIED, "Certified"),
    (CERT_HEURISTIC, "Heuristic"),
]


# =============================================================
# Spectra
# =============================================================
class EigenpairSerializer(serializers.Serializer):
    kind = serializers.CharField()
    x = VectorField()
    residual = serializers.FloatField()

    def get_fields(self):
        # "lambda" is a Python keyword, so it cannot be a class attribute
        fields = super().get_fields()
        return {
            "kind": fields["kind"],
            "lambda": serializers.FloatField(source="lam"),
            "x": fields["x"],
            "residual": fields["residual"],
        }


class SubsetSpectrumSerializer(serializers.Serializer):
    subset = SubsetField()
    smallest_h = serializers.FloatField(allow_null=True)
    smallest_z = serializers.FloatField(allow_null=True)
    certified = serializers.BooleanField()


class DeltaReportSerializer(serializers.Serializer):
    dim = serializers.IntegerField()
    delta_h = serializers.FloatField(allow_null=True)
    delta_z = serializers.FloatField(allow_null=True)
    argmin_subset_h = SubsetField(allow_null=True)
    argmin_subset_z = SubsetField(allow_null=True)
    witness_h = VectorField(allow_null=True)
    witness_z = VectorField(allow_null=True)
    certified = serializers.BooleanField()
    per_subset = SubsetSpectrumSerializer(many=True)


# =============================================================
# Alpha Quantities & Classification
# =============================================================
class AlphaResultSerializer(serializers.Serializer):
    value = serializers.FloatField()
    minimizer = VectorField()
    objective_kind = serializers.ChoiceField(choices=OP_CHOICES)
    certification = serializers.ChoiceField(choices=CERTIFICATION_CHOICES)
    grid_resolution = serializers.FloatField(allow_null=True)
    grid_gap = serializers.FloatField(allow_null=True)
    lower_bound = serializers.FloatField(allow_null=True)


class PVerdictSerializer(serializers.Serializer):
    status = serializers.ChoiceField(choices=STATUS_CHOICES)
    certification = serializers.ChoiceField(choices=CERTIFICATION_CHOICES)
    alpha_t_value = serializers.FloatField()
    alpha_f_value = serializers.FloatField(allow_null=True)
    witness = VectorField(allow_null=True)
    witness_value = serializers.FloatField(allow_null=True)
    diag_violations = serializers.ListField(child=serializers.IntegerField())
    note = serializers.CharField(allow_blank=True)


class ShiftWitnessSerializer(serializers.Serializer):
    kind = serializers.CharField()
    shift = serializers.FloatField()
    witness = VectorField()
    value = serializers.FloatField()
    verified = serializers.BooleanField()


# =============================================================
# Tensor Complementarity
# =============================================================
class TcpSolutionSerializer(serializers.Serializer):
    x = VectorField()
    w = VectorField()
    residual = serializers.FloatField()
    iterations = serializers.IntegerField()
    converged = serializers.BooleanField()
    start_index = serializers.IntegerField(allow_null=True)


# =============================================================
# Bound Verification
# =============================================================
class InequalityOutcomeSerializer(serializers.Serializer):
    name = serializers.CharField()
    outcome = serializers.ChoiceField(choices=OUTCOME_CHOICES)
    lhs = serializers.FloatField(allow_null=True)
    rhs = serializers.FloatField(allow_null=True)
    margin = serializers.FloatField(allow_null=True)
    gap = serializers.FloatField(allow_null=True)
    note = serializers.CharField(allow_blank=True)


class BoundReportSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    dim = serializers.IntegerField()
    seed = serializers.IntegerField(allow_null=True)
    alpha_t = AlphaResultSerializer(allow_null=True)
    alpha_f = AlphaResultSerializer(allow_null=True)
    delta_h = serializers.FloatField(allow_null=True)
    delta_z = serializers.FloatField(allow_null=True)
    min_diag = serializers.FloatField()
    row_sum_bound_t = serializers.FloatField()
    row_sum_bound_f = serializers.FloatField(allow_null=True)
    tightness_t = serializers.FloatField(allow_null=True)
    tightness_f = serializers.FloatField(allow_null=True)
    certified = serializers.BooleanField()
    outcomes = InequalityOutcomeSerializer(many=True)


class SummaryStatsSerializer(serializers.Serializer):
    minimum = serializers.FloatField(allow_null=True)
    mean = serializers.FloatField(allow_null=True)
    maximum = serializers.FloatField(allow_null=True)
    count = serializers.IntegerField()


class BatchReportSerializer(serializers.Serializer):
    generator = serializers.DictField()
    count = serializers.IntegerField()
    outcome_counts = serializers.DictField(child=serializers.IntegerField())
    alpha_t_stats = SummaryStatsSerializer()
    alpha_f_stats = SummaryStatsSerializer()
    tightness_t_stats = SummaryStatsSerializer()
    tightness_f_stats = SummaryStatsSerializer()
    reports = BoundReportSerializer(many=True)
