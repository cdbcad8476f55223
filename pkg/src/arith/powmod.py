"""
Fraction-Free Modular Powers in y

Computes y^D modulo E(x, y) over F_p(x)[y] without rational functions:
the remainder is returned as polynomial numerators r_i(x) together with
the power of the leading coefficient e_d(x) that divides them.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union
import logging

from src.errors import CertificateFailure, DegreeTooSmall, InvalidInput
from .bigindex import BigIndex
from .bipoly import BiPoly, bipoly_mul
from .poly import UniPoly, upoly_gcd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FractionFreeRemainder:
    """
    y^D = (r_0 + r_1 y + ... + r_{d-1} y^{d-1}) / lc^exponent  (mod E).

    ``coeffs`` always has length d.
    """

    coeffs: Tuple[UniPoly, ...]
    exponent: int
    leading: UniPoly

    @property
    def degree_bound(self) -> int:
        """Largest x-degree among the numerators (-1 when all vanish)."""
        return max((len(c.coeffs) - 1 for c in self.coeffs), default=-1)

    def numerator(self, i: int) -> UniPoly:
        return self.coeffs[i]


def _square_in_y(values: List[UniPoly]) -> List[UniPoly]:
    fld = values[0].field
    packed = BiPoly.from_y_coeffs(fld, values)
    square = bipoly_mul(packed, packed).y_coeffs()
    length = 2 * len(values) - 1
    return square + [UniPoly.zero(fld)] * (length - len(square))


def pseudo_reduce(values: List[UniPoly], modulus: Sequence[UniPoly]) -> Tuple[List[UniPoly], int]:
    """
    Reduce a y-polynomial of nominal length L modulo the degree-d modulus.

    Performs exactly L - d steps, each multiplying the whole polynomial by
    the leading coefficient, so the denominator exponent is predictable.
    """
    d = len(modulus) - 1
    lead = modulus[d]
    constant_lead = lead.degree == 0
    values = list(values)
    steps = 0
    for t in range(len(values) - 1, d - 1, -1):
        top = values[t]
        for i in range(t):
            if values[i]:
                values[i] = values[i].scale(lead[0]) if constant_lead else values[i] * lead
        if top:
            for j in range(d):
                if modulus[j]:
                    values[t - d + j] = values[t - d + j] - top * modulus[j]
        steps += 1
    return values[:d], steps


def powmod_monomial(modulus: Sequence[UniPoly], D: int) -> FractionFreeRemainder:
    """
    y^D modulo sum_j modulus[j](x) y^j, by left-to-right binary powering.

    Small D (below the modulus degree) returns y^D itself with exponent 0.
    """
    d = len(modulus) - 1
    if d < 1 or modulus[d].is_zero:
        raise InvalidInput("modulus must have positive degree in y")
    if D < 0:
        raise InvalidInput(f"exponent must be nonnegative, got {D}")
    fld = modulus[0].field
    zero = UniPoly.zero(fld)
    values = [UniPoly.one(fld)]
    exponent = 0
    n = 0
    for bit in bin(D)[2:]:
        if n:
            values = _square_in_y(values)
            n *= 2
            if len(values) > d:
                values, steps = pseudo_reduce(values, modulus)
                exponent = 2 * exponent + steps
            else:
                exponent *= 2
        if bit == "1":
            values = [zero] + values
            n += 1
            if len(values) > d:
                values, steps = pseudo_reduce(values, modulus)
                exponent += steps
    values = values + [zero] * (d - len(values))
    return FractionFreeRemainder(tuple(values), exponent, modulus[d])


def y_power_mod(E: BiPoly, D: Union[BigIndex, int]) -> FractionFreeRemainder:
    """y^D mod E for any D >= 0 (monomial when D < deg_y E)."""
    return powmod_monomial(E.y_coeffs(), int(D))


def bipoly_powmod_y(E: BiPoly, D: Union[BigIndex, int]) -> FractionFreeRemainder:
    """
    y^D mod E in fraction-free form.

    Args:
        E: Modulus with deg_y E = d >= 1
        D: Exponent, D >= d

    Returns:
        Remainder with exponent D - d + 1 and deg_x r_i <= deg_x(E) * (D - d + 1)

    Raises:
        DegreeTooSmall: if D < d (use y_power_mod for the monomial case)
    """
    D = int(D)
    d = E.deg_y
    if E.is_zero or d < 1:
        raise InvalidInput("modulus must have positive degree in y")
    if D < d:
        raise DegreeTooSmall(f"exponent {D} is below the modulus degree {d}")
    result = y_power_mod(E, D)
    logger.debug(f"y^{D} mod E: exponent {result.exponent}, x-degree {result.degree_bound}")
    return result


# =============================================================================
# Squarefree reduction in y over F_p[x]
# =============================================================================


def _trim_y(values: Sequence[UniPoly]) -> List[UniPoly]:
    values = list(values)
    while values and values[-1].is_zero:
        values.pop()
    return values


def y_primitive_part(values: Sequence[UniPoly]) -> List[UniPoly]:
    """Divide a y-polynomial by the gcd of its x-coefficients."""
    values = _trim_y(values)
    if not values:
        return values
    content = UniPoly.zero(values[0].field)
    for c in values:
        if c:
            content = upoly_gcd(content, c)
    if content.degree > 0:
        values = [c.exact_div(content) for c in values]
    return values


def y_pseudo_remainder(a: Sequence[UniPoly], b: Sequence[UniPoly]) -> List[UniPoly]:
    """lc(b)^k a mod b with all arithmetic in F_p[x]."""
    a, b = _trim_y(a), _trim_y(b)
    if not b:
        raise InvalidInput("pseudo-division by the zero polynomial")
    db = len(b) - 1
    lead = b[db]
    while a and len(a) - 1 >= db:
        top = a[-1]
        shift = len(a) - 1 - db
        a = [c * lead for c in a]
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - top * b[j]
        a = _trim_y(a)
    return a


def y_gcd(a: Sequence[UniPoly], b: Sequence[UniPoly]) -> List[UniPoly]:
    """Primitive gcd in y by the primitive remainder sequence."""
    a, b = y_primitive_part(a), y_primitive_part(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, y_primitive_part(y_pseudo_remainder(a, b))
    return a


def y_exact_quotient(a: Sequence[UniPoly], b: Sequence[UniPoly]) -> List[UniPoly]:
    """
    a / b for a primitive divisor b of a.

    Raises:
        CertificateFailure: if b does not divide a
    """
    a, b = _trim_y(a), _trim_y(b)
    db = len(b) - 1
    fld = b[0].field
    quotient = [UniPoly.zero(fld)] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        t = a[-1].exact_div(b[db])
        quotient[shift] = t
        for j in range(db + 1):
            a[shift + j] = a[shift + j] - t * b[j]
        a = _trim_y(a)
    if a:
        raise CertificateFailure(f"y-division left a remainder of degree {len(a) - 1}")
    return quotient


def y_squarefree_part(E: BiPoly) -> BiPoly:
    """
    E / gcd(E, E_y) over F_p(x)[y], kept in F_p[x][y].

    Drops repeated factors and factors in y^p; a simple root of E is a
    root of the result.
    """
    derivative = E.derivative_y()
    if E.is_zero or derivative.is_zero:
        return E
    common = y_gcd(E.y_coeffs(), derivative.y_coeffs())
    if len(common) <= 1:
        return E
    reduced = BiPoly.from_y_coeffs(E.field, y_exact_quotient(E.y_coeffs(), common))
    logger.debug(f"squarefree part drops y-degree {len(common) - 1}")
    return reduced
