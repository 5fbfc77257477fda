# =============================================================
# Core Utilities
# =============================================================
from functools import wraps

from core.logging.logger import get_logger
from core.exceptions.base import ServiceException, InternalServerException


# =============================================================
# Base Service
# =============================================================
class BaseService:
    """
    Base class for all service-layer classes.

    NOTE:
    - ServiceException is always re-raised to preserve intent
    - Only truly unexpected errors are converted to InternalServerException
    """

    @classmethod
    def logger(cls):
        return get_logger(f"services.{cls.__name__}")


def service_entry(message: str):
    """
    Wrap a service classmethod body in the re-raise/wrap error policy.
    """

    def decorator(func):
        @wraps(func)
        def wrapper(cls, *args, **kwargs):
            try:
                return func(cls, *args, **kwargs)

            # Known service exceptions → rethrow
            except ServiceException:
                raise

            # Unexpected errors → wrap
            except Exception as exc:
                cls.logger().error(
                    message,
                    exc_info=True,
                    extra={"operation": func.__name__},
                )
                raise InternalServerException(f"{message}: {exc}") from exc

        return wrapper

    return decorator
