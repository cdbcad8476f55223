"""
ALGCOEF Pipeline

Method selection, the coefficient engine and its builder.
"""

from .engine import CoefficientEngine, select_method
from .builder import EngineBuilder

__all__ = [
    "CoefficientEngine",
    "EngineBuilder",
    "select_method",
]
