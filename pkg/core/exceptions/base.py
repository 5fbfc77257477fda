# =============================================================
# Base Exception for all service layer errors
# =============================================================
from rest_framework.exceptions import APIException
from rest_framework import status
import logging

logger = logging.getLogger("tensorlab.core.exceptions")

# =============================================================
# CLI Exit Codes
# =============================================================
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2


# =============================================================
# Base Exception
# =============================================================
class ServiceException(APIException):
    """
    Base exception class for all service-layer errors.

    `exit_code` follows the CLI contract: 1 for violated invariants and
    internal failures, 2 for bad input.
    """

    status_code = status.HTTP_500_INTERNAL_SERVER_ERROR
    default_detail = "A service error occurred."
    default_code = "service_error"
    exit_code = EXIT_VIOLATION

    def __init__(self, detail=None, code=None, extra=None):
        if code is not None:
            self.default_code = code
        super().__init__(detail or self.default_detail)
        self.extra = extra or {}

        if self.status_code >= 500:
            logger.error(
                f"{self.__class__.__name__}: {self.detail}",
                exc_info=True,
                extra=self.extra,
            )


# =============================================================
# Input Errors
# =============================================================
class ValidationException(ServiceException):
    default_detail = "Invalid input data."
    default_code = "validation_error"
    status_code = status.HTTP_400_BAD_REQUEST
    exit_code = EXIT_INPUT_ERROR


class InvalidFormatException(ServiceException):
    default_detail = "Invalid data format."
    default_code = "invalid_format"
    status_code = status.HTTP_400_BAD_REQUEST
    exit_code = EXIT_INPUT_ERROR


class DomainException(ServiceException):
    default_detail = "Value outside the real domain of the operation."
    default_code = "domain_error"
    status_code = status.HTTP_400_BAD_REQUEST
    exit_code = EXIT_INPUT_ERROR


class UnsupportedOrderException(ServiceException):
    default_detail = "Operation requires an even tensor order."
    default_code = "unsupported_order"
    status_code = status.HTTP_400_BAD_REQUEST
    exit_code = EXIT_INPUT_ERROR


# =============================================================
# Numerical Outcome Errors
# =============================================================
class BoundViolationException(ServiceException):
    default_detail = "A proven inequality was violated beyond its certification gap."
    default_code = "bound_violation"
    status_code = status.HTTP_409_CONFLICT
    exit_code = EXIT_VIOLATION


class ConvergenceException(ServiceException):
    default_detail = "Solver did not converge."
    default_code = "not_converged"
    status_code = status.HTTP_409_CONFLICT
    exit_code = EXIT_VIOLATION


class InternalServerException(ServiceException):
    status_code = status.HTTP_500_INTERNAL_SERVER_ERROR
    default_detail = "Internal error."
    default_code = "internal_error"
    exit_code = EXIT_VIOLATION
