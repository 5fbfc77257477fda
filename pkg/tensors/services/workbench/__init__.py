from .io_service import IOService
from .bounds_service import BoundsService
from .batch_service import BatchService

__all__ = ["IOService", "BoundsService", "BatchService"]
