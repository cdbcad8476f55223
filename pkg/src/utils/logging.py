"""
Logging Utilities

Records go to stderr so that stdout carries only coefficients, CSV rows
and JSON documents. Pipeline phases are logged through PhaseLog, which
tags each record with key=value fields (prime, dimension, digit count)
and the elapsed wall time of the phase.
"""

import logging
import sys
import time
from typing import Any, Dict, Optional

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Loggers of the third-party stack that are chatty at DEBUG.
QUIET_LOGGERS = ("numpy", "sympy", "urllib3")


def setup_logging(
    level: str = "WARNING",
    format_string: Optional[str] = None,
    log_file: Optional[str] = None,
) -> logging.Logger:
    """
    Route ALGCOEF records to stderr (and optionally a file).

    Repeated calls replace the previous handlers, so tests and the
    bench harness can reconfigure freely.

    Returns:
        The ``src`` package logger
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"unknown log level {level!r}")

    formatter = logging.Formatter(format_string or DEFAULT_FORMAT)
    handlers: list = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)
    root.setLevel(numeric)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(numeric, logging.WARNING))
    return logging.getLogger("src")


def format_fields(fields: Dict[str, Any]) -> str:
    """Render ``{"p": 7, "dim": 15}`` as ``p=7 dim=15``."""
    return " ".join(f"{key}={value}" for key, value in fields.items())


class PhaseLog:
    """
    Context manager around one pipeline phase.

    Logs the start at DEBUG, the completion with its elapsed time at
    INFO, and a failure with the exception type at ERROR. Fields may be
    added inside the block with ``note`` once they are known.

    Example:
        with PhaseLog(logger, "dense diagonal precomputation", p=7) as phase:
            ...
            phase.note(dim=15)
    """

    def __init__(self, logger: logging.Logger, operation: str, **fields: Any):
        self.logger = logger
        self.operation = operation
        self.fields: Dict[str, Any] = dict(fields)
        self.elapsed_ms = 0.0
        self._start: Optional[float] = None

    def note(self, **fields: Any) -> None:
        self.fields.update(fields)

    def _label(self) -> str:
        if not self.fields:
            return self.operation
        return f"{self.operation} [{format_fields(self.fields)}]"

    def __enter__(self) -> "PhaseLog":
        self._start = time.perf_counter()
        self.logger.debug(f"Starting: {self._label()}")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        self.elapsed_ms = (time.perf_counter() - self._start) * 1000
        if exc_type is not None:
            self.logger.error(
                f"Failed: {self._label()} after {self.elapsed_ms:.2f}ms - "
                f"{exc_type.__name__}: {exc_val}"
            )
        else:
            self.logger.info(f"Completed: {self._label()} in {self.elapsed_ms:.2f}ms")
        return False

