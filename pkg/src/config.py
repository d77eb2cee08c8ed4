"""
Settings - dotenv-backed configuration

Values come from the environment (or a local .env file). Every setting has a
default so the CLI and the tests run without any .env present.
"""
import os
import logging
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()


def _int_env(name: str, default: int) -> int:
    """Read an integer setting, falling back to the default on bad input."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️  {name}={raw!r} is not an integer, using {default}")
        return default


LOG_LEVEL = os.getenv("TWISTCDC_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = '%(levelname)s:     %(message)s'

# Full (rotation, signature) sweeps: n + m bits
ENUMERATION_CAP = _int_env("TWISTCDC_ENUMERATION_CAP", 25)

# Signature-only sweeps under a fixed rotation: m bits
SEARCH_CAP = _int_env("TWISTCDC_SEARCH_CAP", 24)

# Experiment reports attach exact oracle values when n + m is at most this
EXACT_ORACLE_CAP = _int_env("TWISTCDC_EXACT_ORACLE_CAP", 16)

RANDOM_CUBIC_RETRIES = _int_env("TWISTCDC_RANDOM_CUBIC_RETRIES", 1000)
CASCADE_BUDGET = _int_env("TWISTCDC_CASCADE_BUDGET", 1000)

REPORTS_DIR = Path(os.getenv("TWISTCDC_REPORTS_DIR", "data/reports"))

PORT = _int_env("PORT", 8000)


def configure_logging(level: str = None) -> None:
    """Configure root logging once for an entry point (CLI, API, scripts)."""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL), logging.INFO),
        format=LOG_FORMAT
    )
