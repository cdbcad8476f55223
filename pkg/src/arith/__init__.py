"""
Arithmetic Substrate

Prime-field scalars, dense univariate, Laurent and bivariate polynomials,
rational functions, section operators, fraction-free modular powering and
radix digits of big indices.
"""

from .field import PrimeField, Fp, fp_inv
from .poly import (
    DEG_ZERO,
    UniPoly,
    MultiplicationPolicy,
    set_multiplication_policy,
    get_multiplication_policy,
    mul_schoolbook,
    mul_karatsuba,
    mul_packed,
    upoly_mul,
    upoly_series_inv,
    upoly_divmod,
    upoly_gcd,
)
from .laurent import LaurentUniPoly, laurent_split
from .bipoly import BiPoly, bipoly_mul
from .rational import RationalFunction
from .bigindex import BigIndex, radix_digits, from_radix_digits
from .sections import section_uni, section_bi, check_digit
from .powmod import (
    FractionFreeRemainder,
    bipoly_powmod_y,
    y_power_mod,
    powmod_monomial,
    pseudo_reduce,
    y_gcd,
    y_squarefree_part,
)

__all__ = [
    # Field
    "PrimeField",
    "Fp",
    "fp_inv",
    # Univariate
    "DEG_ZERO",
    "UniPoly",
    "MultiplicationPolicy",
    "set_multiplication_policy",
    "get_multiplication_policy",
    "mul_schoolbook",
    "mul_karatsuba",
    "mul_packed",
    "upoly_mul",
    "upoly_series_inv",
    "upoly_divmod",
    "upoly_gcd",
    # Laurent / rational
    "LaurentUniPoly",
    "laurent_split",
    "RationalFunction",
    # Bivariate
    "BiPoly",
    "bipoly_mul",
    # Indices
    "BigIndex",
    "radix_digits",
    "from_radix_digits",
    # Sections and powers
    "section_uni",
    "section_bi",
    "check_digit",
    "FractionFreeRemainder",
    "bipoly_powmod_y",
    "y_power_mod",
    "powmod_monomial",
    "pseudo_reduce",
    "y_gcd",
    "y_squarefree_part",
]
