# =============================================================
# STANDARD LIBRARY
# =============================================================
from pathlib import Path
from decouple import Config, RepositoryEnv
import os
# Purpose: File paths and environment config loading.

# =============================================================
# ENV FILE CONFIGURATION
# =============================================================
env_file = os.environ.get("ENV_FILE")

if env_file and Path(env_file).exists():
    config = Config(repository=RepositoryEnv(env_file))
elif Path(".env.local").exists():
    config = Config(repository=RepositoryEnv(".env.local"))
elif Path(".env").exists():
    config = Config(repository=RepositoryEnv(".env"))
else:
    config = Config(repository=os.environ)

ENV = config("ENV", default="local")
# Purpose: Dynamically load environment variables from .env files or system environment.

# =============================================================
# BASE DIRECTORY
# =============================================================
BASE_DIR = Path(__file__).resolve().parent.parent
# Purpose: Root directory reference for logs and default report output.

# =============================================================
# SECURITY & DEBUG
# =============================================================
SECRET_KEY = config(
    "SECRET_KEY",
    default="tensorlab-local-only-key",
    cast=str
)

DEBUG = ENV == "local"
ALLOWED_HOSTS: list[str] = []
# Purpose: Django refuses to start without a key; nothing here is served.

# =============================================================
# INSTALLED APPS
# =============================================================
INSTALLED_APPS = [
    # Third-party apps
    "rest_framework",                  # Serializers for every JSON format

    # Local apps
    "core",
    "tensors",
]
# Purpose: Registers apps so Django finds the `tensorlab` management command.

# =============================================================
# REST FRAMEWORK SETTINGS
# =============================================================
REST_FRAMEWORK = {
    "STRICT_JSON": True,
    "COERCE_DECIMAL_TO_STRING": False,
}
# Purpose: Rejects NaN/Inf on output; numbers stay numbers.

# =============================================================
# DATABASE
# =============================================================
DATABASES: dict = {}
# Purpose: No persistence beyond flat JSON files.

# =============================================================
# TENSORLAB NUMERICAL DEFAULTS
# =============================================================
TENSORLAB = {
    # Eigensolvers
    "EIG_RESIDUAL_TOL": config("TENSORLAB_EIG_RESIDUAL_TOL", default=1e-9, cast=float),
    "EIG_DEDUP_TOL": config("TENSORLAB_EIG_DEDUP_TOL", default=1e-6, cast=float),
    "EIG_STARTS": config("TENSORLAB_EIG_STARTS", default=200, cast=int),
    "EIG_MAX_NEWTON_ITERS": config("TENSORLAB_EIG_MAX_NEWTON_ITERS", default=100, cast=int),
    "EIG_SCAN_RESOLUTION": config("TENSORLAB_EIG_SCAN_RESOLUTION", default=1e-4, cast=float),

    # Alpha quantities
    "ALPHA_GRID_RESOLUTION": config("TENSORLAB_ALPHA_GRID_RESOLUTION", default=0.02, cast=float),
    "ALPHA_REFINE_ITERS": config("TENSORLAB_ALPHA_REFINE_ITERS", default=200, cast=int),
    "ALPHA_STARTS": config("TENSORLAB_ALPHA_STARTS", default=500, cast=int),
    "ALPHA_TOL": config("TENSORLAB_ALPHA_TOL", default=1e-8, cast=float),

    # Tensor complementarity
    "TCP_TOL": config("TENSORLAB_TCP_TOL", default=1e-10, cast=float),
    "TCP_MAX_ITERS": config("TENSORLAB_TCP_MAX_ITERS", default=200, cast=int),
    "TCP_STARTS": config("TENSORLAB_TCP_STARTS", default=20, cast=int),

    # Shared
    "SEED": config("TENSORLAB_SEED", default=0, cast=int),
    "BATCH_WORKERS": config("TENSORLAB_BATCH_WORKERS", default=1, cast=int),
    "LOG_DIR": config("TENSORLAB_LOG_DIR", default=str(BASE_DIR / "logs")),
    "LOG_LEVEL": config("TENSORLAB_LOG_LEVEL", default="INFO"),
}
# Purpose: Every config record reads its defaults from here.

# =============================================================
# INTERNATIONALIZATION
# =============================================================
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True
