"""ALGCOEF Data Models Module."""

from .problem import Method, ProblemInstance, validate_equation
from .results import BENCH_COLUMNS, BenchRecord, Mismatch, SelfCheckReport, SkippedInstance

__all__ = [
    # Problem models
    "Method",
    "ProblemInstance",
    "validate_equation",
    # Result models
    "BENCH_COLUMNS",
    "BenchRecord",
    "Mismatch",
    "SelfCheckReport",
    "SkippedInstance",
]
