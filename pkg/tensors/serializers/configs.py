# =============================================================
# Django REST Framework
# =============================================================
from rest_framework import serializers

# =============================================================
# Constants
# =============================================================
from core.constants import EIG_METHOD_CHOICES, GENERATOR_CHOICES, MODE_CHOICES

# =============================================================
# Local Application
# =============================================================
from tensors.models import AlphaConfig, BoundsConfig, EigConfig, TcpConfig


# =============================================================
# Config Record Serializers
# =============================================================
# Every field is optional: omitted values fall back to settings.TENSORLAB.
class _ConfigSerializer(serializers.Serializer):
    record = None

    def create(self, validated_data):
        return self.record.from_settings(**validated_data)


class EigConfigSerializer(_ConfigSerializer):
    record = EigConfig

    residual_tol = serializers.FloatField(required=False, min_value=0, allow_null=True)
    dedup_tol = serializers.FloatField(required=False, min_value=0, allow_null=True)
    starts = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    max_newton_iters = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    seed = serializers.IntegerField(required=False, min_value=0, allow_null=True)
    scan_resolution = serializers.FloatField(required=False, min_value=0, allow_null=True)
    method = serializers.ChoiceField(choices=EIG_METHOD_CHOICES, required=False, allow_null=True)


class AlphaConfigSerializer(_ConfigSerializer):
    record = AlphaConfig

    mode = serializers.ChoiceField(choices=MODE_CHOICES, required=False, allow_null=True)
    grid_resolution = serializers.FloatField(required=False, min_value=0, max_value=2, allow_null=True)
    refine_iters = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    starts = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    seed = serializers.IntegerField(required=False, min_value=0, allow_null=True)
    tol = serializers.FloatField(required=False, min_value=0, allow_null=True)


class TcpConfigSerializer(_ConfigSerializer):
    record = TcpConfig

    tol = serializers.FloatField(required=False, min_value=0, allow_null=True)
    max_iters = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    starts = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    seed = serializers.IntegerField(required=False, min_value=0, allow_null=True)


class BoundsConfigSerializer(serializers.Serializer):
    eig = EigConfigSerializer(required=False)
    alpha = AlphaConfigSerializer(required=False)
    norm_samples = serializers.IntegerField(required=False, min_value=1, allow_null=True)
    seed = serializers.IntegerField(required=False, min_value=0, allow_null=True)
    workers = serializers.IntegerField(required=False, min_value=1, allow_null=True)

    def create(self, validated_data):
        eig = EigConfig.from_settings(**validated_data.pop("eig", {}))
        alpha = AlphaConfig.from_settings(**validated_data.pop("alpha", {}))
        return BoundsConfig.from_settings(eig=eig, alpha=alpha, **validated_data)


# =============================================================
# Generator Spec Serializer
# =============================================================
class GeneratorSpecSerializer(serializers.Serializer):
    """
    {"kind": ..., "m": int, "n": int, "seed": int, "params": {...}}
    Batch instance i uses seed + i.
    """

    kind = serializers.ChoiceField(choices=GENERATOR_CHOICES)
    m = serializers.IntegerField(min_value=2)
    n = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0, default=0)
    params = serializers.DictField(child=serializers.FloatField(), required=False, default=dict)
