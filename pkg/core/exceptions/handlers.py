# =============================================================
# Global Exception Handler
# =============================================================
# Provides a centralized mechanism to turn exceptions raised while
# running a CLI subcommand into an exit code and an error payload.
# Supports:
#   - Custom service exceptions
#   - DRF validation exceptions (serializer input checks)
#   - Unhandled/internal exceptions
# =============================================================

# =============================================================
# Standard Library
# =============================================================
import logging

# =============================================================
# Third-Party
# =============================================================
from rest_framework.exceptions import APIException, ErrorDetail, ValidationError

# =============================================================
# Local App
# =============================================================
from core.exceptions.base import (
    EXIT_INPUT_ERROR,
    EXIT_VIOLATION,
    ServiceException,
)

# =============================================================
# Logger
# =============================================================
logger = logging.getLogger("tensorlab.core.handlers")


# =============================================================
# Helper: Extract Readable Error Message
# =============================================================
def extract_error_message(data):
    """
    Always return a single readable string for the terminal.
    Handles dicts, lists, tuples, and DRF ErrorDetail objects.
    """
    if isinstance(data, dict):
        # {"detail": "..."}
        if "detail" in data:
            return str(data["detail"])

        # {"entries": ["error message"]}
        for field, errors in data.items():
            if isinstance(errors, (list, tuple)) and errors:
                return f"{field}: {extract_error_message(errors[0])}"
            if isinstance(errors, dict):
                return f"{field}.{extract_error_message(errors)}"
            return f"{field}: {errors}"

    if isinstance(data, (list, tuple)) and data:
        return extract_error_message(data[0])

    if isinstance(data, ErrorDetail):
        return str(data)

    return str(data)


def _payload(code: str, message: str) -> dict:
    return {
        "success": False,
        "error": {
            "code": code,
            "message": message,
        },
    }


# =============================================================
# Global Exception Handler Function
# =============================================================
def command_exception_handler(exc: Exception) -> tuple[int, dict]:
    # Step 1 — Handle Custom Service Exceptions
    if isinstance(exc, ServiceException):
        return exc.exit_code, _payload(exc.default_code, str(exc.detail))

    # Step 2 — Handle DRF Validation Exceptions (serializer input checks)
    if isinstance(exc, ValidationError):
        return EXIT_INPUT_ERROR, _payload("validation_error", extract_error_message(exc.detail))

    if isinstance(exc, APIException):
        return EXIT_VIOLATION, _payload("service_error", extract_error_message(exc.detail))

    # Step 3 — Handle Unhandled / Internal Exceptions
    logger.critical("Unhandled exception occurred", exc_info=exc)

    return EXIT_VIOLATION, _payload("internal_error", "Something went wrong. See error.log for details.")
