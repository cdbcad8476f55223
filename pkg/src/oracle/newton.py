"""
Newton Series Expansion

Quadratically convergent expansion of the root f of E(x, f) = 0 with
f(0) = 0, doubling the precision at each step.
"""

from dataclasses import dataclass
from typing import List
import logging

from src.arith import BiPoly, Fp, UniPoly, upoly_series_inv
from src.errors import InvalidInput
from src.models.problem import validate_equation
from src.utils.timing import timed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesPrefix:
    """f mod x^n."""

    prefix: UniPoly
    n: int
    iterations: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"precision must be positive, got {self.n}")
        if self.prefix.degree >= self.n:
            raise InvalidInput(f"prefix of degree {self.prefix.degree} exceeds precision {self.n}")

    def coefficient(self, k: int) -> Fp:
        if not 0 <= k < self.n:
            raise InvalidInput(f"coefficient {k} outside precision {self.n}")
        return self.prefix.coefficient(k)

    def values(self) -> List[int]:
        """All n coefficients as residues."""
        return [self.prefix[k] for k in range(self.n)]

    def residual(self, E: BiPoly) -> UniPoly:
        """E(x, prefix) mod x^n; zero for a correct prefix."""
        return E.eval_y(self.prefix, self.n)


@timed
def expand_newton(E: BiPoly, n: int) -> SeriesPrefix:
    """
    Expand the root of E to precision n by Newton iteration.

    Each step computes y <- y - E(x, y) / E_y(x, y) modulo the doubled
    precision; E_y(x, y) is a unit because its constant term is E_y(0,0).

    Args:
        E: Equation with E(0,0) = 0 and E_y(0,0) != 0
        n: Precision (number of coefficients)

    Returns:
        SeriesPrefix holding f mod x^n
    """
    validate_equation(E)
    if n < 1:
        raise InvalidInput(f"precision must be positive, got {n}")
    derivative = E.derivative_y()
    y = UniPoly.zero(E.field)
    precision = 1
    iterations = 0
    while precision < n:
        precision = min(2 * precision, n)
        value = E.eval_y(y, precision)
        slope = derivative.eval_y(y, precision)
        y = y - value.mul_trunc(upoly_series_inv(slope, precision), precision)
        iterations += 1
    logger.debug(f"Newton expansion to x^{n} in {iterations} iterations")
    return SeriesPrefix(y.truncate(n), n, iterations)
