"""
Laurent Polynomials over F_p

Finite Laurent series x^v * (c_0 + c_1 x + ...), used for the negative part
of f/c_0 and its Mahler substitutes.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from src.errors import InvalidInput
from .field import Fp, PrimeField
from .poly import UniPoly, format_poly, mul_coeffs


@dataclass(frozen=True, eq=False)
class LaurentUniPoly:
    """
    Laurent polynomial with explicit valuation.

    First and last stored coefficients are nonzero; the zero polynomial has
    an empty tuple and valuation 0.
    """

    field: PrimeField
    valuation: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        p = self.field.p
        values = [c % p for c in self.coeffs]
        lo = 0
        while lo < len(values) and values[lo] == 0:
            lo += 1
        hi = len(values)
        while hi > lo and values[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "valuation", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "valuation", self.valuation + lo)
            object.__setattr__(self, "coeffs", tuple(values[lo:hi]))

    @classmethod
    def zero(cls, fld: PrimeField) -> "LaurentUniPoly":
        return cls(fld, 0, ())

    @classmethod
    def from_poly(cls, poly: UniPoly, valuation: int = 0) -> "LaurentUniPoly":
        """x^valuation * poly."""
        return cls(poly.field, valuation, poly.coeffs)

    @classmethod
    def from_terms(cls, fld: PrimeField, terms: dict) -> "LaurentUniPoly":
        """Build from an {exponent: coefficient} mapping."""
        if not terms:
            return cls.zero(fld)
        lo, hi = min(terms), max(terms)
        values = [0] * (hi - lo + 1)
        for e, c in terms.items():
            values[e - lo] = c
        return cls(fld, lo, tuple(values))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Union[int, float]:
        return self.valuation + len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, exponent: int) -> int:
        i = exponent - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coefficient(self, exponent: int) -> Fp:
        return Fp(self[exponent], self.field)

    def _align(self, other: "LaurentUniPoly"):
        if other.field != self.field:
            raise InvalidInput(f"mixing {self.field} and {other.field}")
        if self.is_zero:
            return other.valuation, [0] * len(other.coeffs), list(other.coeffs)
        if other.is_zero:
            return self.valuation, list(self.coeffs), [0] * len(self.coeffs)
        lo = min(self.valuation, other.valuation)
        hi = max(self.degree, other.degree)
        a = [self[e] for e in range(lo, hi + 1)]
        b = [other[e] for e in range(lo, hi + 1)]
        return lo, a, b

    def __add__(self, other: "LaurentUniPoly") -> "LaurentUniPoly":
        lo, a, b = self._align(other)
        return LaurentUniPoly(self.field, lo, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "LaurentUniPoly") -> "LaurentUniPoly":
        lo, a, b = self._align(other)
        return LaurentUniPoly(self.field, lo, tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "LaurentUniPoly":
        return LaurentUniPoly(self.field, self.valuation, tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union["LaurentUniPoly", UniPoly]) -> "LaurentUniPoly":
        if isinstance(other, UniPoly):
            other = LaurentUniPoly.from_poly(other)
        if other.field != self.field:
            raise InvalidInput(f"mixing {self.field} and {other.field}")
        if self.is_zero or other.is_zero:
            return LaurentUniPoly.zero(self.field)
        product = mul_coeffs(self.coeffs, other.coeffs, self.field.p)
        return LaurentUniPoly(self.field, self.valuation + other.valuation, tuple(product))

    __rmul__ = __mul__

    def inflate(self, k: int) -> "LaurentUniPoly":
        """Substitute x -> x^k (k >= 1); exponents are multiplied by k."""
        if k < 1:
            raise InvalidInput(f"inflation factor must be positive, got {k}")
        if k == 1 or self.is_zero:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        out[::k] = self.coeffs
        return LaurentUniPoly(self.field, self.valuation * k, tuple(out))

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            other = LaurentUniPoly.from_poly(other)
        if not isinstance(other, LaurentUniPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.valuation, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentUniPoly({self})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, self.field, offset=self.valuation)


def laurent_split(g: LaurentUniPoly) -> Tuple[LaurentUniPoly, UniPoly]:
    """
    Split g into its negative part and its nonnegative part.

    Returns:
        (neg, nonneg) with g = neg + nonneg, neg supported on exponents < 0
    """
    fld = g.field
    if g.is_zero:
        return LaurentUniPoly.zero(fld), UniPoly.zero(fld)
    if g.valuation >= 0:
        return LaurentUniPoly.zero(fld), UniPoly(fld, (0,) * g.valuation + g.coeffs)
    cut = -g.valuation
    neg = LaurentUniPoly(fld, g.valuation, g.coeffs[:cut])
    nonneg = UniPoly(fld, g.coeffs[cut:])
    return neg, nonneg
