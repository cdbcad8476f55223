"""ALGCOEF Configuration Module."""

from .settings import (
    ALGCOEFConfig,
    MulAlgorithm,
)

__all__ = [
    "ALGCOEFConfig",
    "MulAlgorithm",
]
