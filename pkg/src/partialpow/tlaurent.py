"""
Diagonal Decomposition in t

b(x/t, t) = sum_{v=-delta_minus}^{delta_plus} b_v(x) t^v, where b_v collects
the v-th diagonal of b, and the set of diagonal offsets of b^(p-1) that the
digit matrices can ever read.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple
import logging

from src.arith import BiPoly, PrimeField, UniPoly
from src.errors import InvalidInput

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TLaurentPoly:
    field: PrimeField
    delta_minus: int
    delta_plus: int
    coeffs: Dict[int, UniPoly] = field(default_factory=dict)

    def __getitem__(self, v: int) -> UniPoly:
        return self.coeffs.get(v, UniPoly.zero(self.field))

    @property
    def order(self) -> int:
        """t-degree of t^delta_minus b(x/t, t)."""
        return self.delta_minus + self.delta_plus

    def shifted(self) -> List[UniPoly]:
        """Coefficients P_0..P_order of P(t) = t^delta_minus b(x/t, t)."""
        return [self[w - self.delta_minus] for w in range(self.order + 1)]


def t_laurent(b: BiPoly) -> TLaurentPoly:
    """
    Diagonals of b: b_v(x) = sum_i b_{i,i+v} x^i.

    Raises:
        InvalidInput: if b is zero
    """
    if b.is_zero:
        raise InvalidInput("cannot expand the zero polynomial")
    buckets: Dict[int, Dict[int, int]] = {}
    for i, j, c in b.terms():
        buckets.setdefault(j - i, {})[i] = c
    coeffs = {}
    for v, terms in buckets.items():
        values = [0] * (max(terms) + 1)
        for i, c in terms.items():
            values[i] = c
        coeffs[v] = UniPoly(b.field, tuple(values))
    return TLaurentPoly(b.field, -min(coeffs), max(coeffs), coeffs)


@dataclass(frozen=True)
class DeltaSet:
    """Sorted diagonal offsets of b^(p-1) needed by the digit matrices."""

    deltas: Tuple[int, ...]

    def __iter__(self):
        return iter(self.deltas)

    def __len__(self) -> int:
        return len(self.deltas)

    def __contains__(self, delta: int) -> bool:
        return delta in self.deltas


def useful_deltas(d_x: int, d_y: int, delta_minus: int, delta_plus: int, p: int) -> DeltaSet:
    """([-d_y, d_x] + pZ) intersected with [(1-p) delta_minus, (p-1) delta_plus]."""
    if min(d_x, d_y, delta_minus, delta_plus) < 0:
        raise InvalidInput("degree bounds must be nonnegative")
    lo, hi = (1 - p) * delta_minus, (p - 1) * delta_plus
    result = set()
    # windows [kp - d_y, kp + d_x] that can meet [lo, hi]
    for k in range(-((d_x - lo) // p), (hi + d_y) // p + 1):
        start = max(k * p - d_y, lo)
        stop = min(k * p + d_x, hi)
        result.update(range(start, stop + 1))
    logger.debug(f"{len(result)} useful diagonals out of {hi - lo + 1}")
    return DeltaSet(tuple(sorted(result)))
