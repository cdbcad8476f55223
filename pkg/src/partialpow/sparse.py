"""
Partial Powering

Only the diagonals pi_delta(x) = sum_i B_{i,i+delta} x^i of B = b^(p-1) with
delta in the useful set are computed, through
pi_delta = sum_{u + p v = delta} c_u(x) b_v(x^p).
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union
import logging

from src.arith import BiPoly, BigIndex, Fp, PrimeField, UniPoly
from src.diagonal import BasePowerSource, DiagonalRep, LinearRep, furstenberg
from src.errors import InvalidInput, NonPolynomialResult
from src.utils.logging import PhaseLog
from .fiduccia import FiducciaSequence
from .tlaurent import DeltaSet, TLaurentPoly, t_laurent, useful_deltas

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SparseDiagonalTable:
    """pi_delta for every delta in the useful set."""

    field: PrimeField
    deltas: DeltaSet
    lo: int  # (1-p) delta_minus
    hi: int  # (p-1) delta_plus
    diagonals: Dict[int, UniPoly]

    def __getitem__(self, delta: int) -> UniPoly:
        if delta < self.lo or delta > self.hi:
            return UniPoly.zero(self.field)
        if delta not in self.diagonals:
            raise InvalidInput(f"diagonal {delta} is not stored")
        return self.diagonals[delta]

    def __len__(self) -> int:
        return len(self.diagonals)

    def keys(self) -> List[int]:
        return sorted(self.diagonals)

    def entry(self, alpha: int, beta: int) -> int:
        """B_{alpha,beta} = [x^alpha] pi_{beta-alpha}."""
        if alpha < 0 or beta < 0:
            return 0
        return self[beta - alpha][alpha]


def _convolution_terms(tl: TLaurentPoly, delta: int) -> List[Tuple[int, int]]:
    """Pairs (u, v) with u + p v = delta, u >= delta_minus and b_v != 0."""
    p = tl.field.p
    terms = []
    for v in range(-tl.delta_minus, tl.delta_plus + 1):
        u = delta - p * v
        if u >= tl.delta_minus and tl[v]:
            terms.append((u, v))
    return terms


def partial_power(
    b: BiPoly,
    delta: int,
    sequence: Optional[FiducciaSequence] = None,
) -> UniPoly:
    """
    The delta-diagonal of b^(p-1) without computing the full power.

    Args:
        b: Bivariate polynomial
        delta: Diagonal offset (column minus row)
        sequence: Shared c_u cache for b

    Returns:
        pi_delta(x), zero outside [(1-p) delta_minus, (p-1) delta_plus]

    Raises:
        NonPolynomialResult: if the denominator fails to divide exactly
    """
    if sequence is None:
        sequence = FiducciaSequence(t_laurent(b))
    tl = sequence.tl
    p = b.field.p
    if not (1 - p) * tl.delta_minus <= delta <= (p - 1) * tl.delta_plus:
        return UniPoly.zero(b.field)

    terms = _convolution_terms(tl, delta)
    sequence.prefetch(u for u, _ in terms)
    parts = [(sequence.fraction_free(u), v) for u, v in terms]
    exponent = max((e for (_, e), _ in parts), default=0)
    numerator = UniPoly.zero(b.field)
    for (c_num, e), v in parts:
        if c_num:
            numerator = numerator + c_num * (sequence.lead ** (exponent - e)) * tl[v].inflate(p)
    denominator = sequence.lead ** exponent
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonPolynomialResult(f"diagonal {delta}: denominator does not divide the sum")
    return quotient


def sparse_power(
    b: BiPoly,
    p: Optional[int] = None,
    d_x: Optional[int] = None,
    d_y: Optional[int] = None,
) -> SparseDiagonalTable:
    """
    Table of the useful diagonals of b^(p-1).

    Args:
        b: Bivariate polynomial
        p: Characteristic (defaults to the field's)
        d_x, d_y: Rectangle bounds of the representation (default: degrees of b)
    """
    fld = b.field
    if p is not None and p != fld.p:
        raise InvalidInput(f"p = {p} does not match {fld}")
    p = fld.p
    d_x = int(b.deg_x) if d_x is None else d_x
    d_y = int(b.deg_y) if d_y is None else d_y
    tl = t_laurent(b)
    deltas = useful_deltas(d_x, d_y, max(tl.delta_minus, 0), max(tl.delta_plus, 0), p)
    sequence = FiducciaSequence(tl)
    sequence.prefetch(u for delta in deltas for u, _ in _convolution_terms(tl, delta))
    diagonals = {delta: partial_power(b, delta, sequence) for delta in deltas}
    logger.info(f"Sparse power: {len(diagonals)} diagonals for p = {p}")
    return SparseDiagonalTable(
        fld,
        deltas,
        (1 - p) * tl.delta_minus,
        (p - 1) * tl.delta_plus,
        diagonals,
    )


class SparsePowerSource(BasePowerSource):
    """
    Useful diagonals of B only.

    Pros:
    - Quasi-linear in p
    - Stores O(p) coefficients per diagonal instead of the full square

    Cons:
    - Rational-function bookkeeping per diagonal
    """

    def __init__(self, rep: DiagonalRep):
        super().__init__(rep)
        self.table: Optional[SparseDiagonalTable] = None

    def _build(self) -> None:
        self.table = sparse_power(self.rep.b, d_x=self.rep.d_x, d_y=self.rep.d_y)

    def entry(self, alpha: int, beta: int) -> int:
        self.build()
        return self.table.entry(alpha, beta)


def create_sparse_source(rep: DiagonalRep) -> SparsePowerSource:
    """Factory function to create and build a sparse power source."""
    return SparsePowerSource(rep).build()


def build_sparse_linrep(E: BiPoly, cache_size: int = 0) -> LinearRep:
    """Linear representation of the root of E backed by partial powering."""
    with PhaseLog(logger, "sparse diagonal precomputation", p=E.field.p) as phase:
        rep = furstenberg(E)
        linrep = LinearRep(rep, SparsePowerSource(rep), cache_size=cache_size)
        phase.note(dx=rep.d_x, dy=rep.d_y, dim=linrep.dim)
    return linrep


def coeff_via_diagonal_fast(
    E: BiPoly,
    N: Union[BigIndex, int, str],
    linrep: Optional[LinearRep] = None,
) -> Fp:
    """
    N-th coefficient of the root of E, precomputation by partial powering.

    Same contract as the dense diagonal route.
    """
    if linrep is None:
        linrep = build_sparse_linrep(E)
    return linrep.coefficient(N)
