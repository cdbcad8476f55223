"""
Power Sources

The digit matrices only read entries B_{alpha,beta} of B = b^(p-1). A
power source provides those entries: the dense source holds all of B, the
sparse source (partialpow) only the diagonals that can be reached.
"""

from abc import ABC, abstractmethod
from typing import Optional
import logging

import numpy as np

from src.arith import BiPoly, check_digit
from src.utils.timing import Timer
from .furstenberg import DiagonalRep, full_power

logger = logging.getLogger(__name__)


def matrix_dtype(p: int, dim: int):
    """int64 when a length-dim dot product of residues cannot overflow."""
    return np.int64 if (p - 1) ** 2 * max(dim, 1) < 2**63 else object


class BasePowerSource(ABC):
    """
    Abstract base class for sources of B = b^(p-1) entries.

    All sources must build their data once and then answer entry lookups.
    """

    def __init__(self, rep: DiagonalRep):
        """
        Initialize power source.

        Args:
            rep: Furstenberg representation whose b is powered
        """
        self.rep = rep
        self.p = rep.field.p
        self._built = False
        self.build_ms = 0.0

    @property
    def is_built(self) -> bool:
        """Check if the power data has been computed."""
        return self._built

    def build(self) -> "BasePowerSource":
        """Compute the power data (idempotent)."""
        if not self._built:
            with Timer(f"{type(self).__name__}.build") as timer:
                self._build()
            self.build_ms = timer.elapsed_ms
            self._built = True
        return self

    @abstractmethod
    def _build(self) -> None:
        pass

    @abstractmethod
    def entry(self, alpha: int, beta: int) -> int:
        """
        Coefficient of x^alpha y^beta in B.

        Args:
            alpha: x-exponent (may be out of range, giving 0)
            beta: y-exponent (may be out of range, giving 0)
        """
        pass

    def matrix_for_digit(self, r: int) -> np.ndarray:
        """
        A_r with A_r[(i,j),(n,m)] = B_{p i + r - n, p j + r - m}.

        Rows are result monomials x^i y^j, columns input monomials x^n y^m,
        both flattened as i (1 + d_y) + j.
        """
        check_digit(r, self.rep.field)
        self.build()
        d_x, d_y, p = self.rep.d_x, self.rep.d_y, self.p
        width = d_y + 1
        dim = self.rep.dimension
        A = np.zeros((dim, dim), dtype=matrix_dtype(p, dim))
        for i in range(d_x + 1):
            for j in range(d_y + 1):
                row = i * width + j
                for n in range(d_x + 1):
                    alpha = p * i + r - n
                    if alpha < 0:
                        continue
                    for m in range(d_y + 1):
                        beta = p * j + r - m
                        if beta >= 0:
                            A[row, n * width + m] = self.entry(alpha, beta)
        return A


class DensePowerSource(BasePowerSource):
    """
    Full power B = b^(p-1).

    Pros:
    - Simple, one bivariate powering
    - Matrix assembly is a single pass over the monomials of B

    Cons:
    - Theta(p^2 d_x d_y) coefficients to compute and store
    """

    def __init__(self, rep: DiagonalRep, B: Optional[BiPoly] = None):
        super().__init__(rep)
        self.B = B
        self._built = B is not None

    def _build(self) -> None:
        self.B = full_power(self.rep.b)
        logger.info(f"Dense power b^{self.p - 1}: degrees ({self.B.deg_x}, {self.B.deg_y})")

    def entry(self, alpha: int, beta: int) -> int:
        self.build()
        return self.B[alpha, beta]

    def matrix_for_digit(self, r: int) -> np.ndarray:
        """One pass over B, placing each monomial where the congruences allow."""
        check_digit(r, self.rep.field)
        self.build()
        d_x, d_y, p = self.rep.d_x, self.rep.d_y, self.p
        width = d_y + 1
        dim = self.rep.dimension
        A = np.zeros((dim, dim), dtype=matrix_dtype(p, dim))
        for alpha, beta, c in self.B.terms():
            # n = p i + r - alpha must lie in [0, d_x]
            for n in range((r - alpha) % p, d_x + 1, p):
                i = (alpha + n - r) // p
                if not 0 <= i <= d_x:
                    continue
                for m in range((r - beta) % p, d_y + 1, p):
                    j = (beta + m - r) // p
                    if 0 <= j <= d_y:
                        A[i * width + j, n * width + m] = c
        return A


def create_dense_source(rep: DiagonalRep) -> DensePowerSource:
    """Factory function to create and build a dense power source."""
    return DensePowerSource(rep).build()


def matrix_for_digit(rep: DiagonalRep, B: BiPoly, r: int) -> np.ndarray:
    """A_r of rep, reading entries from an already computed power B."""
    return DensePowerSource(rep, B).matrix_for_digit(r)
