from .eigen_service import EigenService
from .spectral_service import SpectralService

__all__ = ["EigenService", "SpectralService"]
