"""
Problem Data Models

The algebraic equation E(x, y) = 0, the requested index and method, and
the validation shared by every pipeline.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional
import logging

from src.arith import BiPoly, BigIndex, PrimeField
from src.errors import InvalidInput

logger = logging.getLogger(__name__)


class Method(str, Enum):
    """Coefficient extraction methods."""

    NAIVE = "naive"  # Newton expansion up to x^(N+1)
    MAHLER = "mahler"  # Mahler equation + section stepping
    DIAGONAL = "diagonal"  # Furstenberg representation, dense b^(p-1)
    DIAGONAL_FAST = "diagonal-fast"  # Furstenberg representation, partial powering
    AUTO = "auto"  # diagonal-fast above the crossover prime, diagonal below


def validate_equation(E: BiPoly, require_nonlinear: bool = False) -> None:
    """
    Check that E(x, y) = 0 has a unique power series root with f(0) = 0.

    Args:
        E: Bivariate polynomial
        require_nonlinear: Also demand deg_y E >= 2

    Raises:
        InvalidInput: if E(0,0) != 0, E_y(0,0) = 0, or the degree is too small
    """
    if E.is_zero:
        raise InvalidInput("equation is the zero polynomial")
    if E.at_origin() != 0:
        raise InvalidInput("E(0,0) must vanish")
    if E[0, 1] == 0:
        raise InvalidInput("E_y(0,0) must be nonzero")
    if require_nonlinear and E.deg_y < 2:
        raise InvalidInput(f"degree in y must be at least 2, got {E.deg_y}")


@dataclass
class ProblemInstance:
    """
    A coefficient query: f_N for the root f of E over F_p.

    Validation runs at construction; degrees are derived.
    """

    field: PrimeField
    equation: BiPoly
    index: BigIndex = BigIndex(0)
    method: Method = Method.AUTO
    seed: Optional[int] = None  # recorded for generated instances

    # Derived
    d: int = 0  # degree in y
    h: int = 0  # degree in x

    def __post_init__(self):
        if self.equation.field != self.field:
            raise InvalidInput(f"equation lives over {self.equation.field}, expected {self.field}")
        validate_equation(self.equation)
        self.method = Method(self.method)
        self.d = int(self.equation.deg_y)
        self.h = int(self.equation.deg_x)
        if self.d == 1:
            logger.warning("degree 1 in y: the series is rational")

    @property
    def p(self) -> int:
        return self.field.p

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "E": str(self.equation),
            "N": str(self.index),
            "method": self.method.value,
            "d": self.d,
            "h": self.h,
            "seed": self.seed,
        }
