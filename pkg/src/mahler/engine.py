"""
Mahler Coefficient Engine

Precomputes the monic Mahler data once, then answers f_N by stepping the
section state along the base-p digits of each shifted index N - j.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Union
import logging
import threading

from src.arith import BiPoly, BigIndex, Fp, radix_digits
from src.models.problem import validate_equation
from src.oracle.newton import SeriesPrefix, expand_newton
from src.utils.logging import PhaseLog
from .equation import MahlerEquation, algeq_to_mahler
from .monic import compute_rhs, monicize, negative_part_and_h0
from .stepping import MonicMahlerData, SectionState, evaluate_state, run_digits, section_step

logger = logging.getLogger(__name__)


def radix_suffix_chain(n: int, radix: int) -> Set[int]:
    """{n mod radix^j : 0 <= j <= number of digits of n}."""
    if radix < 2:
        raise ValueError(f"radix must be at least 2, got {radix}")
    chain = {0}
    power = 1
    while True:
        power *= radix
        chain.add(n % power)
        if power > n:
            return chain


@dataclass
class IndexTrace:
    """
    Instrumentation of Mahler queries.

    ``evaluated`` holds the h-indices whose states were run to the end.
    After j section steps on h_n the state stands for the series whose
    constant term is h_(n mod p^j); with radix = p, ``suffix_chains``
    records exactly those intermediate indices.
    """

    radix: int
    evaluated: Set[int] = field(default_factory=set)
    suffix_chains: Dict[int, Set[int]] = field(default_factory=dict)
    steps: Dict[int, int] = field(default_factory=dict)
    section_steps: int = 0

    def record(self, n: int, digit_count: int) -> None:
        self.evaluated.add(n)
        self.suffix_chains[n] = radix_suffix_chain(n, self.radix)
        self.steps[n] = digit_count
        self.section_steps += digit_count

    def all_indices(self, radix: Optional[int] = None) -> Set[int]:
        """
        Union of the suffix chains.

        Without an argument these are the base-p indices the section states
        pass through. Another radix only re-expresses the evaluated indices
        (radix 10 gives their decimal suffixes) and is not what the stepping
        computes.
        """
        result: Set[int] = set()
        for n in self.evaluated:
            result |= self.suffix_chains[n] if radix is None else radix_suffix_chain(n, radix)
        return result


def mahler_residual_ok(meq: MahlerEquation, prefix: SeriesPrefix) -> bool:
    """sum_k c_k(x) f(x^(p^k)) == 0 mod x^n for the prefix f mod x^n."""
    return meq.residual(prefix.prefix, prefix.n).is_zero


class MahlerPipeline:
    """
    Mahler-equation route to f_N.

    Usage:
        pipeline = MahlerPipeline(E)
        pipeline.coefficient(1251)
    """

    def __init__(self, E: BiPoly, equation: Optional[MahlerEquation] = None):
        validate_equation(E, require_nonlinear=True)
        self.E = E
        self.field = E.field
        with PhaseLog(logger, "Mahler precomputation", p=self.field.p) as phase:
            self.equation = equation or algeq_to_mahler(E)
            a = monicize(self.equation)
            self.g_minus, h0 = negative_part_and_h0(E, self.equation)
            rhs = compute_rhs(a, self.g_minus)
            self.data = MonicMahlerData(self.field, tuple(a), rhs, h0)
            phase.note(order=self.data.order, D=self.data.D, state=self.data.representation_size)
        self._prefix: Optional[SeriesPrefix] = None
        self._lock = threading.Lock()

    @property
    def representation_size(self) -> int:
        return self.data.representation_size

    def _small_prefix(self) -> SeriesPrefix:
        with self._lock:
            if self._prefix is None:
                self._prefix = expand_newton(self.E, self.equation.d0 + 1)
            return self._prefix

    def h_coefficient(self, n: int, trace: Optional[IndexTrace] = None) -> Fp:
        """h_n for n >= 0 by one section step per base-p digit."""
        digits = radix_digits(n, self.field.p)[::-1]
        state = run_digits(self.data, digits)
        if trace is not None:
            trace.record(n, len(digits))
        logger.debug(f"h_{n} after {len(digits)} section steps")
        return evaluate_state(state, self.data.h0)

    def coefficient(self, N: Union[BigIndex, int, str], trace: Optional[IndexTrace] = None) -> Fp:
        """
        f_N = sum_j c_{0,j} h_{N-j} over the support of c_0.

        Indices N <= deg c_0 would reach the negative part; those come
        from a Newton prefix of length deg c_0 + 1.
        """
        n = int(BigIndex.coerce(N))
        c0 = self.equation.coeffs[0]
        if n <= self.equation.d0:
            return self._small_prefix().coefficient(n)
        total = self.field.zero
        for j in range(self.equation.v0, self.equation.d0 + 1):
            if c0[j]:
                total = total + self.h_coefficient(n - j, trace) * c0[j]
        return total

    def h_prefix(self, n: int) -> List[Fp]:
        """
        h_0..h_(n-1) by a depth-first walk over low-order digits.

        Indices sharing their last j base-p digits share the first j section
        steps, so the whole prefix costs about n p / (p - 1) steps.
        """
        if n <= 0:
            return []
        p = self.field.p
        root = SectionState.series(self.field, self.data.order)
        values: List[Fp] = [self.field.zero] * n
        values[0] = evaluate_state(root, self.data.h0)
        stack = [(root, 0, 1)]
        while stack:
            state, m, power = stack.pop()
            for r in range(p):
                child = m + r * power
                # a zero digit is only worth taking if a nonzero one follows
                if child >= n or (r == 0 and m + power * p >= n):
                    continue
                next_state = section_step(state, self.data, r)
                if r:
                    values[child] = evaluate_state(next_state, self.data.h0)
                stack.append((next_state, child, power * p))
        return values

    def coefficients(self, n: int) -> List[Fp]:
        """f_0..f_(n-1) from one shared walk over h_0..h_(n-1)."""
        if n <= 0:
            return []
        d0, v0 = self.equation.d0, self.equation.v0
        c0 = self.equation.coeffs[0]
        small = self._small_prefix()
        h = self.h_prefix(n)
        result = []
        for k in range(n):
            if k <= d0:
                result.append(small.coefficient(k))
                continue
            total = self.field.zero
            for j in range(v0, d0 + 1):
                if c0[j]:
                    total = total + h[k - j] * c0[j]
            result.append(total)
        return result


def coeff_via_mahler(
    E: BiPoly,
    N: Union[BigIndex, int, str],
    trace: Optional[IndexTrace] = None,
) -> Fp:
    """
    N-th coefficient of the root of E through its Mahler equation.

    Args:
        E: Equation with deg_y E >= 2
        N: Index
        trace: Optional record of the h-indices evaluated

    Returns:
        f_N in F_p
    """
    return MahlerPipeline(E).coefficient(N, trace)

