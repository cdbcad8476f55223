"""
Catalan Numbers modulo p

Independent big-index oracle for E = y - x - y^2, whose root is
f = sum_n C_n x^(n+1). Binomials are reduced digit by digit (Lucas).
"""

from functools import lru_cache
from typing import List, Tuple, Union

from src.arith import BigIndex, Fp, PrimeField, radix_digits
from src.errors import InvalidInput

# Factorial tables are built only for primes up to this bound.
_TABLE_LIMIT = 1_000_000


@lru_cache(maxsize=16)
def _factorial_table(p: int) -> Tuple[List[int], List[int]]:
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [1] * p
    inv_fact[p - 1] = pow(fact[p - 1], -1, p)
    for i in range(p - 1, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p
    return fact, inv_fact


def _small_binom(a: int, b: int, p: int) -> int:
    if b < 0 or b > a:
        return 0
    if p <= _TABLE_LIMIT:
        fact, inv_fact = _factorial_table(p)
        return fact[a] * inv_fact[b] * inv_fact[a - b] % p
    b = min(b, a - b)
    num = den = 1
    for i in range(b):
        num = num * (a - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def binom_mod_p(a: int, b: int, p: int) -> int:
    """binom(a, b) mod p by Lucas' theorem."""
    if b < 0 or b > a:
        return 0
    top = radix_digits(a, p)[::-1]
    bottom = radix_digits(b, p)[::-1]
    result = 1
    for i, bi in enumerate(bottom):
        ai = top[i] if i < len(top) else 0
        result = result * _small_binom(ai, bi, p) % p
        if result == 0:
            break
    return result


def catalan_mod_p(N: Union[BigIndex, int], p: Union[PrimeField, int]) -> Fp:
    """
    [x^N] of the Catalan series, i.e. C_{N-1} mod p.

    Uses C_n = binom(2n, n) - binom(2n, n+1), which avoids dividing by n+1.
    """
    fld = p if isinstance(p, PrimeField) else PrimeField(int(p))
    N = int(N)
    if N < 1:
        raise InvalidInput(f"Catalan oracle needs N >= 1, got {N}")
    n = N - 1
    value = binom_mod_p(2 * n, n, fld.p) - binom_mod_p(2 * n, n + 1, fld.p)
    return fld(value)
