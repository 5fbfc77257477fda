# =============================================================
# Standard Library
# =============================================================
from pathlib import Path

# =============================================================
# Core
# =============================================================
from core.exceptions import InvalidFormatException
from core.exceptions.handlers import extract_error_message
from core.utils import read_json, write_json

# =============================================================
# Local
# =============================================================
from tensors.models import Tensor, TcpInstance
from tensors.serializers import TcpInstanceSerializer, TensorSerializer
from tensors.services import BaseService


# =============================================================
# IO Service
# =============================================================
class IOService(BaseService):
    """Flat-file persistence for tensors, TCP instances and reports."""

    # ---------------------------------------------------------
    # Parsing
    # ---------------------------------------------------------
    @classmethod
    def parse_tensor(cls, payload, source: str = "tensor") -> Tensor:
        serializer = TensorSerializer(data=payload)
        if not serializer.is_valid():
            raise InvalidFormatException(
                f"Invalid tensor in {source}: {extract_error_message(serializer.errors)}"
            )
        return serializer.save()

    @classmethod
    def tensor_payload(cls, A: Tensor) -> dict:
        return TensorSerializer(A).data

    # ---------------------------------------------------------
    # Tensors
    # ---------------------------------------------------------
    @classmethod
    def load_tensor(cls, path) -> Tensor:
        A = cls.parse_tensor(read_json(path), source=str(path))
        cls.logger().debug("Tensor loaded", extra={"path": str(path), "m": A.order, "n": A.dim})
        return A

    @classmethod
    def dump_tensor(cls, A: Tensor, path) -> Path:
        return write_json(path, cls.tensor_payload(A))

    # ---------------------------------------------------------
    # TCP Instances
    # ---------------------------------------------------------
    @classmethod
    def load_tcp_instance(cls, path) -> TcpInstance:
        path = Path(path)
        serializer = TcpInstanceSerializer(data=read_json(path))
        if not serializer.is_valid():
            raise InvalidFormatException(
                f"Invalid TCP instance in {path}: {extract_error_message(serializer.errors)}"
            )
        data = serializer.validated_data

        if "tensor_file" in data:
            tensor_path = Path(data["tensor_file"])
            if not tensor_path.is_absolute():
                tensor_path = path.parent / tensor_path
            A = cls.load_tensor(tensor_path)
        else:
            A = Tensor.from_entries(data["tensor"]["order"], data["tensor"]["dim"], data["tensor"]["entries"])

        return TcpInstance(tensor=A, q=data["q"])

    @classmethod
    def dump_tcp_instance(cls, inst: TcpInstance, path) -> Path:
        return write_json(path, {"tensor": cls.tensor_payload(inst.tensor), "q": inst.q.tolist()})

    # ---------------------------------------------------------
    # Reports
    # ---------------------------------------------------------
    @classmethod
    def dump_report(cls, payload, path) -> Path:
        written = write_json(path, payload)
        cls.logger().info("Report written", extra={"path": str(written)})
        return written

    @classmethod
    def dump_text(cls, text: str, path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path
