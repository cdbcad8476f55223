"""
Monic Mahler Data

Writes f = c_0 g and splits g into its negative part g_- and its
nonnegative part h, which satisfies
h = b + a_1 h(x^p) + ... + a_K h(x^(p^K)).
"""

from typing import List, Sequence, Tuple
import logging

from src.arith import BiPoly, Fp, LaurentUniPoly, UniPoly, laurent_split, upoly_series_inv
from src.oracle.newton import expand_newton
from .equation import MahlerEquation

logger = logging.getLogger(__name__)


def monicize(meq: MahlerEquation) -> List[UniPoly]:
    """
    a_k = -c_k * c_0^(p^k - 2) for k = 1..K.

    Dividing sum_k c_k (c_0 g)(x^(p^k)) = 0 by c_0^2 uses
    c_0(x^(p^k)) = c_0(x)^(p^k).
    """
    p = meq.field.p
    c0 = meq.coeffs[0]
    result = []
    power = UniPoly.one(meq.field)
    previous_exponent = 0
    for k in range(1, meq.order + 1):
        exponent = p**k - 2
        power = power * (c0 ** (exponent - previous_exponent))
        previous_exponent = exponent
        result.append(-(meq.coeffs[k] * power))
    logger.debug(f"Monic coefficients of degrees {[int(a.degree) for a in result]}")
    return result


def negative_part_and_h0(E: BiPoly, meq: MahlerEquation) -> Tuple[LaurentUniPoly, Fp]:
    """
    Negative part of f/c_0 and the constant term of its nonnegative part.

    With c_0 = x^v0 u(x), u(0) != 0, the quotient f/c_0 is x^(-v0) f/u; both
    pieces are read off f * u^(-1) mod x^(v0+1).
    """
    v0 = meq.v0
    precision = v0 + 1
    unit = meq.coeffs[0].shift(-v0)
    f = expand_newton(E, precision).prefix
    quotient = f.mul_trunc(upoly_series_inv(unit, precision), precision)
    g_minus = LaurentUniPoly(E.field, -v0, quotient.coeffs[:v0])
    h0 = quotient.coefficient(v0)
    return g_minus, h0


def compute_rhs(a: Sequence[UniPoly], g_minus: LaurentUniPoly) -> UniPoly:
    """
    Nonnegative part of -(g_- + sum_k c'_k g_-(x^(p^k))) with c'_k = -a_k.
    """
    p = g_minus.field.p
    total = -g_minus
    for k, a_k in enumerate(a, start=1):
        total = total + g_minus.inflate(p**k) * a_k
    return laurent_split(total)[1]
