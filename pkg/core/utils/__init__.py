from .helpers import read_json, write_json, render_json
from .responses import command_response

__all__ = ["read_json", "write_json", "render_json", "command_response"]
