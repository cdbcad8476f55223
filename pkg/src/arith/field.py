"""
Prime Field Arithmetic

PrimeField holds the modulus p and performs residue arithmetic on plain
ints; Fp is the boxed scalar handed back to callers.
"""

from dataclasses import dataclass
from typing import Union
import logging

from sympy import isprime

from src.errors import InvalidInput, ZeroInverse

logger = logging.getLogger(__name__)

MAX_MODULUS = 1 << 61


@dataclass(frozen=True)
class PrimeField:
    """
    The prime field F_p.

    Polynomials store residues as ints in [0, p) and keep a reference to
    their field, so the heavy arithmetic never boxes scalars.
    """

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InvalidInput(f"modulus must be an integer, got {self.p!r}")
        if not 2 <= self.p < MAX_MODULUS:
            raise InvalidInput(f"modulus must satisfy 2 <= p < 2^61, got {self.p}")
        # sympy's test is deterministic below 2^64
        if not isprime(self.p):
            raise InvalidInput(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> "Fp":
        return Fp(value % self.p, self)

    @property
    def zero(self) -> "Fp":
        return Fp(0, self)

    @property
    def one(self) -> "Fp":
        return Fp(1, self)

    def reduce(self, value: int) -> int:
        """Canonical residue of an integer."""
        return value % self.p

    def inv(self, value: int) -> int:
        """Inverse of a residue, as a residue."""
        value %= self.p
        if value == 0:
            raise ZeroInverse(f"0 has no inverse modulo {self.p}")
        return pow(value, -1, self.p)

    def neg(self, value: int) -> int:
        return -value % self.p

    def signed(self, value: int) -> int:
        """Symmetric representative in (-p/2, p/2], for display."""
        value %= self.p
        return value - self.p if value > self.p // 2 else value

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class Fp:
    """An element of F_p."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise InvalidInput(f"residue {self.value} outside [0, {self.field.p})")

    def _coerce(self, other: Union["Fp", int]) -> int:
        if isinstance(other, Fp):
            if other.field != self.field:
                raise InvalidInput(f"mixing {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp((v - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return Fp(self.value * self.field.inv(v) % self.field.p, self.field)

    def __neg__(self):
        return Fp(-self.value % self.field.p, self.field)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return Fp(pow(self.field.inv(self.value), -exponent, self.field.p), self.field)
        return Fp(pow(self.value, exponent, self.field.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.p))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"

    def __str__(self) -> str:
        return str(self.value)


def fp_inv(a: Fp) -> Fp:
    """
    Multiplicative inverse in F_p.

    Raises:
        ZeroInverse: if a is zero
    """
    return Fp(a.field.inv(a.value), a.field)
