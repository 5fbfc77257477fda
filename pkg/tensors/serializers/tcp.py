# =============================================================
# Django REST Framework
# =============================================================
from rest_framework import serializers

# =============================================================
# Local Application
# =============================================================
from tensors.serializers.fields import VectorField
from tensors.serializers.tensor import TensorSerializer


# =============================================================
# TCP Instance Serializer
# =============================================================
class TcpInstanceSerializer(serializers.Serializer):
    """
    {"tensor": {...} | "tensor_file": "path", "q": [reals]}

    A relative tensor_file is resolved against the instance file's folder
    by the reader; the serializer only checks the shape of the payload.
    """

    tensor = TensorSerializer(required=False)
    tensor_file = serializers.CharField(required=False, allow_blank=False)
    q = VectorField(allow_empty=False)

    def validate(self, attrs):
        if ("tensor" in attrs) == ("tensor_file" in attrs):
            raise serializers.ValidationError("Give exactly one of 'tensor' or 'tensor_file'.")
        tensor = attrs.get("tensor")
        if tensor is not None and len(attrs["q"]) != tensor["dim"]:
            raise serializers.ValidationError(
                {"q": f"Expected {tensor['dim']} components, got {len(attrs['q'])}."}
            )
        return attrs
