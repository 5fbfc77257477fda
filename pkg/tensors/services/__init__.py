# =============================================================
# Base Service
# =============================================================
from .base import BaseService, service_entry

__all__ = ["BaseService", "service_entry"]
