"""
Undetermined Coefficients Expansion

Solves for f_1, f_2, ... one at a time. The powers f^j are maintained
online, so every step is a handful of dot products; numpy carries them in
int64 when the residues are small enough and falls back to Python ints.
"""

import logging

import numpy as np

from src.arith import BiPoly, UniPoly
from src.errors import InvalidInput
from src.models.problem import validate_equation
from src.utils.timing import timed
from .newton import SeriesPrefix

logger = logging.getLogger(__name__)

_INT64_BUDGET = 1 << 62


def _dtype_for(p: int, n: int):
    return np.int64 if (p - 1) ** 2 * max(n, 1) < _INT64_BUDGET else object


@timed
def expand_undetermined(E: BiPoly, n: int) -> SeriesPrefix:
    """
    Expand the root of E to precision n coefficient by coefficient.

    [x^k] E(x, f) = 0 is linear in f_k with slope E_y(0,0), and every other
    contribution only involves f_1..f_{k-1}.
    """
    validate_equation(E)
    if n < 1:
        raise InvalidInput(f"precision must be positive, got {n}")
    p = E.field.p
    d = int(E.deg_y)
    dtype = _dtype_for(p, n)
    # powers[j][k] = [x^k] f^j
    powers = np.zeros((d + 1, n), dtype=dtype)
    powers[0, 0] = 1
    terms = [(i, j, c) for i, j, c in E.terms()]
    slope_inv = E.field.inv(E[0, 1])

    for k in range(1, n):
        f_prev = powers[1, 1:k]
        for j in range(2, d + 1):
            # f_k never enters [x^k] f^j for j >= 2 because f(0) = 0
            powers[j, k] = int(np.dot(f_prev, powers[j - 1, k - 1:0:-1])) % p if k > 1 else 0
        acc = 0
        for i, j, c in terms:
            if i > k or (i == 0 and j == 1):
                continue
            acc += c * int(powers[j, k - i])
        powers[1, k] = (-acc * slope_inv) % p

    prefix = UniPoly(E.field, tuple(int(v) for v in powers[1]))
    logger.debug(f"Undetermined-coefficient expansion to x^{n}")
    return SeriesPrefix(prefix, n)
