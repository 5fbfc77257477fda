from .sphere_search import SphereSearch
from .alpha_service import AlphaService

__all__ = ["SphereSearch", "AlphaService"]
