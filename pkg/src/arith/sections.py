"""
Section Operators

S_r keeps the coefficients whose index is congruent to r modulo p and
divides the index by p. The bivariate version uses the same residue for
both variables, which is what makes it commute with the diagonal.
"""

from .bipoly import BiPoly
from .field import PrimeField
from .poly import UniPoly
from src.errors import BadDigit


def check_digit(r: int, fld: PrimeField) -> int:
    if not isinstance(r, int) or not 0 <= r < fld.p:
        raise BadDigit(f"digit must lie in [0, {fld.p}), got {r!r}")
    return r


def section_uni(f: UniPoly, r: int) -> UniPoly:
    """S_r f: result_k = f_{pk+r}."""
    check_digit(r, f.field)
    return UniPoly._raw(f.field, list(f.coeffs[r::f.field.p]))


def section_bi(v: BiPoly, r: int) -> BiPoly:
    """S_r v: result_{k,l} = v_{pk+r, pl+r}."""
    check_digit(r, v.field)
    p = v.field.p
    rows = tuple(row[r::p] for row in v.grid[r::p])
    return BiPoly(v.field, rows)
