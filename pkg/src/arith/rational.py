"""
Rational Functions in F_p(x)

Canonical form: gcd(num, den) = 1 and den monic, so equality is structural.
"""

from dataclasses import dataclass

from src.errors import InvalidInput, NonPolynomialResult
from .field import PrimeField
from .poly import UniPoly, upoly_gcd


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """num/den with monic, coprime denominator."""

    num: UniPoly
    den: UniPoly

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if self.num.field != self.den.field:
            raise InvalidInput(f"mixing {self.num.field} and {self.den.field}")
        num, den = self.num, self.den
        if num.is_zero:
            den = UniPoly.one(den.field)
        else:
            g = upoly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            inv = den.field.inv(den.leading)
            num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_poly(cls, poly: UniPoly) -> "RationalFunction":
        return cls(poly, UniPoly.one(poly.field))

    @classmethod
    def zero(cls, fld: PrimeField) -> "RationalFunction":
        return cls(UniPoly.zero(fld), UniPoly.one(fld))

    @property
    def field(self) -> PrimeField:
        return self.num.field

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def to_poly(self) -> UniPoly:
        if not self.is_polynomial:
            raise NonPolynomialResult(f"denominator of degree {self.den.degree} remains")
        return self.num

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UniPoly):
            return RationalFunction.from_poly(other)
        if isinstance(other, int):
            return RationalFunction.from_poly(UniPoly.constant(self.field, other))
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    def __add__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._lift(other)
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (UniPoly, int)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) / ({self.den})"
