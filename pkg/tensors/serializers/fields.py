# =============================================================
# Standard Library
# =============================================================
import math

# =============================================================
# Django REST Framework
# =============================================================
from rest_framework import serializers

# =============================================================
# Local Application Models
# =============================================================
from tensors.models import SubsetIndex


# =============================================================
# Finite Float Field
# =============================================================
class FiniteFloatField(serializers.FloatField):
    default_error_messages = {
        "non_finite": "A finite number is required.",
    }

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        if not math.isfinite(value):
            self.fail("non_finite")
        return value


# =============================================================
# Vector Field
# =============================================================
class VectorField(serializers.ListField):
    """
    A real vector; reads a JSON array of finite numbers, writes any
    1-D sequence (numpy arrays included) as plain floats.
    """

    def __init__(self, **kwargs):
        kwargs.setdefault("child", FiniteFloatField())
        super().__init__(**kwargs)


# =============================================================
# Subset Field
# =============================================================
class SubsetField(serializers.Field):
    """
    A principal-subset index as a sorted array of 1-based members.
    Range checks against n happen where n is known.
    """

    default_error_messages = {
        "invalid": "Expected a non-empty array of increasing positive integers.",
    }

    def to_representation(self, value: SubsetIndex):
        return list(value.members)

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data:
            self.fail("invalid")
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in data):
            self.fail("invalid")
        if any(i < 1 for i in data) or list(data) != sorted(set(data)):
            self.fail("invalid")
        return tuple(data)
