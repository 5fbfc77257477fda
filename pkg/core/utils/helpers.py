# =============================================================
# Standard Library
# =============================================================
import json
from pathlib import Path

# =============================================================
# Third-Party
# =============================================================
from rest_framework.renderers import JSONRenderer
from rest_framework.utils.encoders import JSONEncoder

# =============================================================
# Core Exceptions
# =============================================================
from core.exceptions import InvalidFormatException, ValidationException


# =============================================================
# JSON Rendering
# =============================================================
class ReportRenderer(JSONRenderer):
    # floats go through repr(), the shortest string that reads back bit-exactly
    encoder_class = JSONEncoder
    ensure_ascii = False
    compact = False


def render_json(payload) -> str:
    return ReportRenderer().render(payload, renderer_context={"indent": 2}).decode("utf-8")


def _reject_constant(name: str):
    raise InvalidFormatException(f"Non-finite value '{name}' is not allowed.")


# =============================================================
# JSON File Reader
# =============================================================
def read_json(path: str | Path):
    # Step 1 — Resolve path and make sure the file exists
    path = Path(path)
    if not path.is_file():
        raise ValidationException(f"File not found: {path}")

    # Step 2 — Parse, surfacing syntax errors as format errors
    try:
        return json.loads(path.read_text(encoding="utf-8"), parse_constant=_reject_constant)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InvalidFormatException(f"Malformed JSON in {path}: {exc}") from exc


# =============================================================
# JSON File Writer
# =============================================================
def write_json(path: str | Path, payload) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_json(payload) + "\n", encoding="utf-8")
    return path
