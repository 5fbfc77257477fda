# =============================================================
# Service Exceptions — Public Package Exports
# =============================================================

from .base import (
    EXIT_OK,
    EXIT_VIOLATION,
    EXIT_INPUT_ERROR,

    ServiceException,

    # Input
    ValidationException,
    InvalidFormatException,
    DomainException,
    UnsupportedOrderException,

    # Numerical outcome
    BoundViolationException,
    ConvergenceException,
    InternalServerException,
)

__all__ = [
    "EXIT_OK",
    "EXIT_VIOLATION",
    "EXIT_INPUT_ERROR",

    # Base
    "ServiceException",

    # Input
    "ValidationException",
    "InvalidFormatException",
    "DomainException",
    "UnsupportedOrderException",

    # Numerical outcome
    "BoundViolationException",
    "ConvergenceException",
    "InternalServerException",
]
