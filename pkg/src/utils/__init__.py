"""
ALGCOEF Utilities

Logging, timing, and serialization utilities.
"""

from .logging import setup_logging, PhaseLog
from .timing import timed, Timer
from .serialization import save_json, load_yaml

__all__ = [
    # Logging
    "setup_logging",
    "PhaseLog",
    # Timing
    "timed",
    "Timer",
    # Serialization
    "save_json",
    "load_yaml",
]
