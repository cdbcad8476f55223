"""
Section Stepping

A state (a; b_0, ..., b_K) stands for the series
s = a + b_0 h + b_1 h(x^p) + ... + b_K h(x^(p^K)). Applying S_r to s stays
in the same space, so h_N is reached by one step per base-p digit of N.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple
import logging

from src.arith import Fp, PrimeField, UniPoly, section_uni

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonicMahlerData:
    """
    Coefficients of h = rhs + a_1 h(x^p) + ... + a_K h(x^(p^K)).

    Immutable once built; queries for different N share it.
    """

    field: PrimeField
    a: Tuple[UniPoly, ...]
    rhs: UniPoly
    h0: Fp
    D: int = 0

    def __post_init__(self):
        bound = max(
            [int(c.degree) for c in self.a if c] + ([int(self.rhs.degree)] if self.rhs else []),
            default=0,
        )
        if self.D < bound:
            object.__setattr__(self, "D", bound)

    @property
    def order(self) -> int:
        return len(self.a)

    @property
    def representation_size(self) -> int:
        """(K+2)(D+1): a plus b_0..b_K, each of degree at most D."""
        return (self.order + 2) * (self.D + 1)


@dataclass(frozen=True)
class SectionState:
    a: UniPoly
    b: Tuple[UniPoly, ...]

    @classmethod
    def series(cls, fld: PrimeField, order: int) -> "SectionState":
        """The state representing h itself: (0; 1, 0, ..., 0)."""
        zero = UniPoly.zero(fld)
        return cls(zero, (UniPoly.one(fld),) + (zero,) * order)

    @property
    def degree(self) -> int:
        """Largest component degree, -1 for the zero state."""
        return max(len(c.coeffs) - 1 for c in (self.a,) + self.b)


def section_step(state: SectionState, data: MonicMahlerData, r: int) -> SectionState:
    """
    Apply S_r to the represented series.

    a' = S_r(a + b_0 rhs), b'_k = S_r(b_0 a_{k+1} + b_{k+1}), b'_K = 0.
    """
    b0 = state.b[0]
    K = data.order
    if b0:
        new_a = section_uni(state.a + b0 * data.rhs, r)
        new_b = [section_uni(b0 * data.a[k] + state.b[k + 1], r) for k in range(K)]
    else:
        new_a = section_uni(state.a, r)
        new_b = [section_uni(state.b[k + 1], r) for k in range(K)]
    new_b.append(UniPoly.zero(data.field))
    return SectionState(new_a, tuple(new_b))


def evaluate_state(state: SectionState, h0: Fp) -> Fp:
    """Value at x = 0 of a + sum_k b_k h(x^(p^k)), using h(0) = h0."""
    total = state.a.coefficient(0)
    for c in state.b:
        total = total + c.coefficient(0) * h0
    return total


def run_digits(data: MonicMahlerData, digits: Sequence[int]) -> SectionState:
    """Fold section steps over digits given least significant first."""
    state = SectionState.series(data.field, data.order)
    for r in digits:
        state = section_step(state, data, r)
    return state
