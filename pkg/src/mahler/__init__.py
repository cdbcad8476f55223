"""
Mahler Pipeline

Minimal Mahler equation of an algebraic series, its monic inhomogeneous
form, and coefficient extraction by section stepping.
"""

from .equation import (
    MahlerEquation,
    algeq_to_mahler,
    fraction_free_echelon,
    frobenius_remainders,
    matrix_rank,
    polynomial_kernel_vector,
)
from .monic import monicize, negative_part_and_h0, compute_rhs
from .stepping import MonicMahlerData, SectionState, section_step, evaluate_state, run_digits
from .engine import (
    IndexTrace,
    MahlerPipeline,
    coeff_via_mahler,
    mahler_residual_ok,
    radix_suffix_chain,
)

__all__ = [
    # Derivation
    "MahlerEquation",
    "algeq_to_mahler",
    "fraction_free_echelon",
    "frobenius_remainders",
    "matrix_rank",
    "polynomial_kernel_vector",
    # Monic form
    "monicize",
    "negative_part_and_h0",
    "compute_rhs",
    # Stepping
    "MonicMahlerData",
    "SectionState",
    "section_step",
    "evaluate_state",
    "run_digits",
    # Engine
    "IndexTrace",
    "MahlerPipeline",
    "coeff_via_mahler",
    "mahler_residual_ok",
    "radix_suffix_chain",
]
