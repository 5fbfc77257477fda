# =============================================================
# Standard Library
# =============================================================
import math

# =============================================================
# Django REST Framework
# =============================================================
from rest_framework import serializers

# =============================================================
# Local Application
# =============================================================
from tensors.models import Tensor
from tensors.serializers.fields import FiniteFloatField


# =============================================================
# Tensor Serializer
# =============================================================
class TensorSerializer(serializers.Serializer):
    """
    Tensor file format:

        {"m": int, "n": int, "entries": [n^m reals]}

    entries are row-major over (i_1, ..., i_m), i_1 slowest.
    """

    # ---------------------------------------------------------
    # Shape
    # ---------------------------------------------------------
    m = serializers.IntegerField(source="order", min_value=2, help_text="Tensor order")
    n = serializers.IntegerField(source="dim", min_value=1, help_text="Tensor dimension")

    # ---------------------------------------------------------
    # Payload
    # ---------------------------------------------------------
    entries = serializers.ListField(
        child=FiniteFloatField(),
        allow_empty=False,
        help_text="n^m entries, row-major",
    )

    # ---------------------------------------------------------
    # Object Validation
    # ---------------------------------------------------------
    def validate(self, attrs):
        expected = attrs["dim"] ** attrs["order"]
        if len(attrs["entries"]) != expected:
            raise serializers.ValidationError(
                {"entries": f"Expected n^m = {expected} entries, got {len(attrs['entries'])}."}
            )
        if not all(math.isfinite(v) for v in attrs["entries"]):
            raise serializers.ValidationError({"entries": "All entries must be finite."})
        return attrs

    # ---------------------------------------------------------
    # Build Domain Object
    # ---------------------------------------------------------
    def create(self, validated_data) -> Tensor:
        return Tensor.from_entries(
            validated_data["order"],
            validated_data["dim"],
            validated_data["entries"],
        )
