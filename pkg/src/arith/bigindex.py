"""
Big Indices and Radix Digits

BigIndex wraps a nonnegative Python int and parses the compact forms
"10^k" and "a*10^k" so huge indices fit on a command line.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import List, Tuple, Union
import re

from src.errors import InvalidInput, NonconformingExponent, ParseError
from .field import PrimeField

# Largest exponent accepted in "b^k" index notation.
MAX_INDEX_EXPONENT = 10_000_000

_INDEX_PATTERN = re.compile(r"^\s*(?:(\d+)\s*\*\s*)?(\d+)\s*(?:\^\s*(\S*))?\s*$")

# Below this many bits, plain repeated division is faster than splitting.
_SPLIT_BITS = 2048
_STR_BITS = 13000


@total_ordering
@dataclass(frozen=True)
class BigIndex:
    """Nonnegative index N of the coefficient f_N."""

    magnitude: int

    def __post_init__(self):
        if not isinstance(self.magnitude, int) or isinstance(self.magnitude, bool):
            raise InvalidInput(f"index must be an integer, got {self.magnitude!r}")
        if self.magnitude < 0:
            raise InvalidInput(f"index must be nonnegative, got {self.magnitude}")

    @classmethod
    def parse(cls, text: str) -> "BigIndex":
        """
        Parse a decimal integer, "b^k" or "a*b^k".

        Raises:
            ParseError: text does not follow the grammar
            NonconformingExponent: exponent is negative or too large
        """
        match = _INDEX_PATTERN.match(text)
        if match is None:
            position = _first_bad_position(text)
            raise ParseError(f"malformed index {text!r}", position, text)
        factor, base, exponent = match.groups()
        if exponent is None:
            value = int(base)
        else:
            if not exponent.isdigit():
                raise NonconformingExponent(
                    f"exponent must be a nonnegative integer, got {exponent!r}",
                    match.start(3),
                    text,
                )
            k = int(exponent)
            if k > MAX_INDEX_EXPONENT:
                raise NonconformingExponent(
                    f"exponent {k} exceeds {MAX_INDEX_EXPONENT}", match.start(3), text
                )
            value = int(base) ** k
        if factor is not None:
            value *= int(factor)
        return cls(value)

    @classmethod
    def coerce(cls, value: Union["BigIndex", int, str]) -> "BigIndex":
        if isinstance(value, BigIndex):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    def __int__(self) -> int:
        return self.magnitude

    def __index__(self) -> int:
        return self.magnitude

    def __lt__(self, other) -> bool:
        return self.magnitude < int(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (BigIndex, int)):
            return self.magnitude == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.magnitude)

    def __sub__(self, small: int) -> "BigIndex":
        if self.magnitude < small:
            raise InvalidInput(f"index {self.magnitude} - {small} would be negative")
        return BigIndex(self.magnitude - small)

    def divmod_small(self, divisor: int) -> Tuple["BigIndex", int]:
        if divisor <= 0:
            raise InvalidInput(f"divisor must be positive, got {divisor}")
        q, r = divmod(self.magnitude, divisor)
        return BigIndex(q), r

    def decimal_digits(self) -> int:
        if self.magnitude.bit_length() < _STR_BITS:
            return len(str(self.magnitude))
        return _estimate_decimal_digits(self.magnitude)

    def __str__(self) -> str:
        # int -> str is capped by the interpreter for very long values
        if self.magnitude.bit_length() < _STR_BITS:
            return str(self.magnitude)
        return f"<{self.decimal_digits()}-digit index>"


def _estimate_decimal_digits(n: int) -> int:
    # exact: adjust the log-based guess by comparing with a power of ten
    guess = int(n.bit_length() * 0.30102999566398120)
    while 10 ** guess > n:
        guess -= 1
    while 10 ** (guess + 1) <= n:
        guess += 1
    return guess + 1


def _first_bad_position(text: str) -> int:
    for i, ch in enumerate(text):
        if not (ch.isdigit() or ch in " *^"):
            return i
    return len(text)


def radix_digits(N: Union[BigIndex, int], p: Union[PrimeField, int]) -> List[int]:
    """
    Base-p digits of N, most significant first.

    Returns [0] for N = 0. Large inputs are split recursively on squared
    powers of p, so the conversion is subquadratic in the size of N.
    """
    n = int(N)
    base = p.p if isinstance(p, PrimeField) else int(p)
    if n < 0:
        raise InvalidInput(f"index must be nonnegative, got {n}")
    if base < 2:
        raise InvalidInput(f"radix must be at least 2, got {base}")
    if n == 0:
        return [0]
    if n.bit_length() <= _SPLIT_BITS:
        low_first = _digits_by_division(n, base)
    else:
        powers = [base]
        while powers[-1] * powers[-1] <= n:
            powers.append(powers[-1] * powers[-1])
        low_first = _digits_by_splitting(n, len(powers) - 1, powers)
    while len(low_first) > 1 and low_first[-1] == 0:
        low_first.pop()
    return low_first[::-1]


def _digits_by_division(n: int, base: int) -> List[int]:
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return out


def _digits_by_splitting(n: int, k: int, powers: List[int]) -> List[int]:
    """Exactly 2^(k+1) digits of n < p^(2^(k+1)), least significant first."""
    width = 1 << (k + 1)
    if powers[k].bit_length() <= _SPLIT_BITS:
        digits = _digits_by_division(n, powers[0])
        return digits + [0] * (width - len(digits))
    hi, lo = divmod(n, powers[k])
    return _digits_by_splitting(lo, k - 1, powers) + _digits_by_splitting(hi, k - 1, powers)


def from_radix_digits(digits: List[int], p: int) -> int:
    """Inverse of radix_digits."""
    value = 0
    for d in digits:
        value = value * p + d
    return value
