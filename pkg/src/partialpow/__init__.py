"""
Partial Powering

Useful diagonals of b^(p-1) through the t-expansion of 1/b(x/t, t) and
Fiduccia's algorithm, and the sparse variant of the diagonal pipeline.
"""

from .tlaurent import DeltaSet, TLaurentPoly, t_laurent, useful_deltas
from .fiduccia import FiducciaSequence, c_coefficient
from .sparse import (
    SparseDiagonalTable,
    SparsePowerSource,
    build_sparse_linrep,
    coeff_via_diagonal_fast,
    create_sparse_source,
    partial_power,
    sparse_power,
)

__all__ = [
    # t-expansion
    "TLaurentPoly",
    "t_laurent",
    "DeltaSet",
    "useful_deltas",
    # Fiduccia
    "FiducciaSequence",
    "c_coefficient",
    # Partial powering
    "SparseDiagonalTable",
    "partial_power",
    "sparse_power",
    "SparsePowerSource",
    "create_sparse_source",
    "build_sparse_linrep",
    "coeff_via_diagonal_fast",
]
