"""
Coefficients of 1/b(x/t, t)

1/b(x/t, t) = t^delta_minus / P(t) = sum_{u >= delta_minus} c_u(x) t^u. The
sequence q_n = c_{delta_minus + n} is annihilated by the reciprocal
polynomial P*(t), so a single q_n is a dot product of t^n mod P* with the
first terms (Fiduccia). Everything stays fraction-free: q_n is carried as
a numerator over a power of P_0 = b_{-delta_minus}(x).
"""

from typing import Dict, Iterable, List, Tuple
import logging
import threading

from src.arith import RationalFunction, UniPoly, powmod_monomial, pseudo_reduce
from src.errors import IndexTooLow
from .tlaurent import TLaurentPoly

logger = logging.getLogger(__name__)

# q_n = numerator / P_0^exponent
FractionFree = Tuple[UniPoly, int]


def _runs(values: Iterable[int]) -> List[Tuple[int, int]]:
    """Maximal runs of consecutive integers as (start, length)."""
    runs: List[Tuple[int, int]] = []
    for v in sorted(set(values)):
        if runs and runs[-1][0] + runs[-1][1] == v:
            runs[-1] = (runs[-1][0], runs[-1][1] + 1)
        else:
            runs.append((v, 1))
    return runs


class FiducciaSequence:
    """
    The sequence (c_u)_{u >= delta_minus} with a per-u cache.

    Usage:
        seq = FiducciaSequence(t_laurent(b))
        seq.prefetch([5, 6, 7])
        seq.rational(7)
    """

    def __init__(self, tl: TLaurentPoly):
        self.tl = tl
        self.field = tl.field
        self.P = tl.shifted()
        self.order = tl.order
        self.lead = self.P[0]
        # P*(t) = t^order P(1/t), leading coefficient P_0
        self.reciprocal = self.P[::-1]
        self.initial = self._initial_segment(max(2 * self.order - 1, self.order, 1))
        self._lead_powers = [self.lead ** k for k in range(self.order)]
        self._cache: Dict[int, FractionFree] = {}
        self._lock = threading.Lock()

    def _initial_segment(self, count: int) -> List[UniPoly]:
        """Q_0..Q_{count-1} with q_n = Q_n / P_0^(n+1)."""
        Q = [UniPoly.one(self.field)]
        lead_powers = [UniPoly.one(self.field)]
        for n in range(1, count):
            lead_powers.append(lead_powers[-1] * self.lead)
            acc = UniPoly.zero(self.field)
            for w in range(1, min(n, self.order) + 1):
                if self.P[w]:
                    acc = acc + self.P[w] * Q[n - w] * lead_powers[w - 1]
            Q.append(-acc)
        return Q

    def by_recurrence(self, n: int) -> FractionFree:
        """q_n by unrolling the recurrence; reference for the windowed path."""
        return self._initial_segment(n + 1)[n], n + 1

    def _combine(self, numerators: List[UniPoly], exponent: int) -> FractionFree:
        """sum_i (r_i / P_0^e) q_i over the common denominator P_0^(e + order)."""
        total = UniPoly.zero(self.field)
        for i, r_i in enumerate(numerators):
            if r_i and self.initial[i]:
                total = total + r_i * self.initial[i] * self._lead_powers[self.order - 1 - i]
        return total, exponent + self.order

    def _window(self, start: int, count: int) -> List[FractionFree]:
        """q_start, ..., q_{start+count-1}."""
        out: List[FractionFree] = []
        n = start
        while n < start + count and (n < len(self.initial) or self.order == 0):
            if n < len(self.initial):
                out.append((self.initial[n], n + 1))
            else:
                out.append((UniPoly.zero(self.field), 0))
            n += 1
        if n == start + count:
            return out
        remainder = powmod_monomial(self.reciprocal, n)
        numerators, exponent = list(remainder.coeffs), remainder.exponent
        while True:
            out.append(self._combine(numerators, exponent))
            n += 1
            if n == start + count:
                return out
            numerators, steps = pseudo_reduce([UniPoly.zero(self.field)] + numerators, self.reciprocal)
            exponent += steps

    def prefetch(self, indices: Iterable[int]) -> None:
        """Compute c_u for all u, one modular power per run of consecutive u."""
        d_minus = self.tl.delta_minus
        with self._lock:
            missing = [u for u in set(indices) if u not in self._cache]
        for start, length in _runs(missing):
            if start < d_minus:
                raise IndexTooLow(f"c_u needs u >= {d_minus}, got {start}")
            values = self._window(start - d_minus, length)
            with self._lock:
                for k, value in enumerate(values):
                    self._cache[start + k] = value
        logger.debug(f"{len(missing)} coefficients c_u computed")

    def fraction_free(self, u: int) -> FractionFree:
        """c_u as (numerator, e) with c_u = numerator / P_0^e."""
        if u < self.tl.delta_minus:
            raise IndexTooLow(f"c_u needs u >= {self.tl.delta_minus}, got {u}")
        with self._lock:
            cached = self._cache.get(u)
        if cached is None:
            self.prefetch([u])
            cached = self._cache[u]
        return cached

    def rational(self, u: int) -> RationalFunction:
        numerator, exponent = self.fraction_free(u)
        return RationalFunction(numerator, self.lead ** exponent)


def c_coefficient(tl: TLaurentPoly, u: int) -> RationalFunction:
    """
    c_u(x) = [t^u] 1/b(x/t, t), normalized.

    Raises:
        IndexTooLow: if u < delta_minus
    """
    return FiducciaSequence(tl).rational(u)
