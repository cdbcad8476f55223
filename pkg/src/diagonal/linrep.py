"""
Linear Representation

(L, (A_r), C) on the rectangle F_p[x,y]_{d_x,d_y}: f_N is
L A_{N_l} ... A_{N_0} C for the base-p digits of N. Digit matrices are
built on first use and cached.
"""

from abc import ABC, abstractmethod
from collections import OrderedDict
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Optional, Union
import logging
import threading

import numpy as np

from src.arith import BigIndex, Fp, PrimeField, check_digit, radix_digits
from src.errors import InvalidInput
from .furstenberg import DiagonalRep
from .schema import LinearRepDocument
from .sources import BasePowerSource, matrix_dtype

if TYPE_CHECKING:
    from src.evaluation.ops import OpCounter

logger = logging.getLogger(__name__)

# Export every digit matrix by default up to this characteristic
EXPORT_ALL_DIGITS_MAX_P = 64


class DigitFold(ABC):
    """Shared fold over base-p digits; subclasses provide matrix(r)."""

    field: PrimeField
    dim: int
    L: np.ndarray
    C: np.ndarray

    @property
    def p(self) -> int:
        return self.field.p

    @abstractmethod
    def matrix(self, r: int) -> np.ndarray:
        """Digit matrix A_r."""

    def fold(self, digits: Iterable[int], counter: Optional["OpCounter"] = None) -> np.ndarray:
        """A_{d_k} ... A_{d_0} C for digits given least significant first."""
        w = self.C.copy()
        for r in digits:
            w = self.matrix(r).dot(w) % self.p
            if counter is not None:
                counter.count("matvec")
                counter.count("mul", self.dim * self.dim)
        return w

    def coefficient(
        self,
        N: Union[BigIndex, int, str],
        counter: Optional["OpCounter"] = None,
    ) -> Fp:
        """
        f_N by a right-to-left fold over the digits of N.

        Args:
            N: Index (BigIndex, int or decimal text)
            counter: Optional operation tally

        Returns:
            f_N in F_p
        """
        digits = radix_digits(BigIndex.coerce(N), self.p)[::-1]
        w = self.fold(digits, counter)
        return Fp(int(self.L.dot(w)) % self.p, self.field)


class LinearRep(DigitFold):
    """
    Linear representation backed by a power source.

    Usage:
        rep = furstenberg(E)
        linrep = LinearRep(rep, DensePowerSource(rep))
        linrep.coefficient(10**50)
    """

    def __init__(self, rep: DiagonalRep, source: BasePowerSource, cache_size: int = 0):
        if source.rep is not rep:
            raise InvalidInput("power source was built for a different representation")
        self.rep = rep
        self.source = source.build()
        self.field = rep.field
        self.dim = rep.dimension
        self.dtype = matrix_dtype(self.p, self.dim)
        self.cache_size = cache_size

        self.L = np.zeros(self.dim, dtype=self.dtype)
        self.L[0] = 1
        inv = self.field.inv(rep.b00)
        width = rep.d_y + 1
        self.C = np.zeros(self.dim, dtype=self.dtype)
        for i, j, c in rep.a.terms():
            self.C[i * width + j] = c * inv % self.p

        self._matrices: "OrderedDict[int, np.ndarray]" = OrderedDict()
        self._lock = threading.Lock()

    @property
    def representation_size(self) -> int:
        return self.dim

    @property
    def cached_digits(self) -> List[int]:
        with self._lock:
            return sorted(self._matrices)

    def matrix(self, r: int) -> np.ndarray:
        """A_r, built on first request."""
        check_digit(r, self.field)
        with self._lock:
            cached = self._matrices.get(r)
            if cached is not None:
                if self.cache_size:
                    self._matrices.move_to_end(r)
                return cached
        A = self.source.matrix_for_digit(r)
        with self._lock:
            A = self._matrices.setdefault(r, A)
            if self.cache_size and len(self._matrices) > self.cache_size:
                self._matrices.popitem(last=False)
        logger.debug(f"Built digit matrix A_{r}")
        return A

    def coefficients_up_to(self, n: int) -> List[Fp]:
        """
        f_0, ..., f_{n-1} level by level.

        Level j holds the vectors for every residue t < p^j as columns;
        level j+1 is A_r times that block for each digit r.
        """
        if n <= 0:
            return []
        W = self.C.reshape(self.dim, 1)
        span = 1
        while span < n:
            blocks = []
            for r in range(self.p):
                start = r * span
                if start >= n:
                    break
                count = min(span, n - start)
                blocks.append(self.matrix(r).dot(W[:, :count]) % self.p)
            W = np.concatenate(blocks, axis=1)
            span *= self.p
        return [Fp(int(v), self.field) for v in W[0, :n]]

    def to_document(self, digits: Optional[Iterable[int]] = None) -> LinearRepDocument:
        if digits is None:
            digits = range(self.p) if self.p <= EXPORT_ALL_DIGITS_MAX_P else self.cached_digits
        return LinearRepDocument(
            p=self.p,
            dx=self.rep.d_x,
            dy=self.rep.d_y,
            L=[int(v) for v in self.L],
            C=[int(v) for v in self.C],
            A={str(r): self.matrix(r).tolist() for r in sorted(set(digits))},
        )

    def to_json(self, digits: Optional[Iterable[int]] = None) -> Dict[str, Any]:
        """{"p", "dx", "dy", "L", "C", "A": {"r": row-major matrix}}."""
        return self.to_document(digits).model_dump()

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "ExportedLinearRep":
        return ExportedLinearRep(LinearRepDocument.model_validate(data))


class ExportedLinearRep(DigitFold):
    """A representation read back from JSON; only exported digits are usable."""

    def __init__(self, document: LinearRepDocument):
        self.document = document
        self.field = PrimeField(document.p)
        self.dim = document.dimension
        dtype = matrix_dtype(document.p, self.dim)
        self.L = np.array(document.L, dtype=dtype)
        self.C = np.array(document.C, dtype=dtype)
        self._matrices = {int(r): np.array(m, dtype=dtype) for r, m in document.A.items()}

    def matrix(self, r: int) -> np.ndarray:
        check_digit(r, self.field)
        if r not in self._matrices:
            raise InvalidInput(f"digit matrix A_{r} was not exported")
        return self._matrices[r]
