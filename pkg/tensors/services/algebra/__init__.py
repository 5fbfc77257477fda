from .tensor_service import TensorService, SHIFT_BY_UNIT, SHIFT_BY_E
from .generator_service import GeneratorService

__all__ = ["TensorService", "GeneratorService", "SHIFT_BY_UNIT", "SHIFT_BY_E"]
