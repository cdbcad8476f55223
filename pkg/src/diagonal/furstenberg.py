"""
Furstenberg Representation

f = Diag(a/b) with a(x, y) = y E_y(xy, y) and b(x, y) = E(xy, y) / y.
"""

from dataclasses import dataclass
from typing import Any, Dict
import logging

from src.arith import BiPoly, PrimeField, section_bi
from src.errors import InvalidInput
from src.models.problem import validate_equation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalRep:
    """Pair (a, b) with f = Diag(a/b) and the rectangle bounds (d_x, d_y)."""

    a: BiPoly
    b: BiPoly
    d_x: int
    d_y: int
    b00: int

    def __post_init__(self):
        if self.b00 % self.field.p == 0:
            raise InvalidInput("b(0,0) must be nonzero")

    @property
    def field(self) -> PrimeField:
        return self.b.field

    @property
    def dimension(self) -> int:
        """(1 + d_x)(1 + d_y), the size of the linear representation."""
        return (1 + self.d_x) * (1 + self.d_y)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.field.p,
            "a": str(self.a),
            "b": str(self.b),
            "dx": self.d_x,
            "dy": self.d_y,
        }


def _degree(value) -> int:
    return int(value) if value >= 0 else 0


def furstenberg(E: BiPoly) -> DiagonalRep:
    """
    Build the rational function whose diagonal is the root of E.

    Raises:
        InvalidInput: if E(0,0) != 0 or E_y(0,0) == 0
    """
    validate_equation(E)
    if E.deg_y < 2:
        logger.warning("degree 1 in y: the series is rational")
    a = E.derivative_y().shear().mul_y()
    b = E.shear().div_y()
    d_x = max(_degree(a.deg_x), _degree(b.deg_x))
    d_y = max(_degree(a.deg_y), _degree(b.deg_y))
    rep = DiagonalRep(a, b, d_x, d_y, b.at_origin())
    logger.debug(f"Furstenberg pair with d_x={d_x}, d_y={d_y}")
    return rep


def full_power(b: BiPoly) -> BiPoly:
    """B = b^(p-1) by binary powering with Kronecker products."""
    return b ** (b.field.p - 1)


def pseudo_section(v: BiPoly, B: BiPoly, r: int) -> BiPoly:
    """T_r v = S_r(v B)."""
    return section_bi(v * B, r)
