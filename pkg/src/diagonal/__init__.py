"""
Diagonal Pipeline

Furstenberg representation f = Diag(a/b), pseudo-section digit matrices
and the linear representation (L, (A_r), C).
"""

from .furstenberg import DiagonalRep, furstenberg, full_power, pseudo_section
from .sources import (
    BasePowerSource,
    DensePowerSource,
    create_dense_source,
    matrix_dtype,
    matrix_for_digit,
)
from .schema import LinearRepDocument
from .linrep import DigitFold, ExportedLinearRep, LinearRep
from .engine import build_dense_linrep, coeff_via_diagonal


__all__ = [
    # Representation
    "DiagonalRep",
    "furstenberg",
    "full_power",
    "pseudo_section",
    "matrix_for_digit",
    # Power sources
    "BasePowerSource",
    "DensePowerSource",
    "create_dense_source",
    "matrix_dtype",
    # Linear representation
    "LinearRepDocument",
    "DigitFold",
    "LinearRep",
    "ExportedLinearRep",
    # Engine
    "build_dense_linrep",
    "coeff_via_diagonal",
]
