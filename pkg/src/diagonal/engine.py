"""
Diagonal Coefficient Engine

Algorithm entry point for the dense variant: Furstenberg pair, full power
b^(p-1), digit matrices on demand.
"""

from typing import Optional, Union
import logging

from src.arith import BiPoly, BigIndex, Fp
from src.utils.logging import PhaseLog
from .furstenberg import furstenberg
from .linrep import LinearRep
from .sources import DensePowerSource

logger = logging.getLogger(__name__)


def build_dense_linrep(E: BiPoly, cache_size: int = 0) -> LinearRep:
    """Linear representation of the root of E backed by the full power of b."""
    with PhaseLog(logger, "dense diagonal precomputation", p=E.field.p) as phase:
        rep = furstenberg(E)
        linrep = LinearRep(rep, DensePowerSource(rep), cache_size=cache_size)
        phase.note(dx=rep.d_x, dy=rep.d_y, dim=linrep.dim)
    return linrep


def coeff_via_diagonal(
    E: BiPoly,
    N: Union[BigIndex, int, str],
    linrep: Optional[LinearRep] = None,
) -> Fp:
    """
    N-th coefficient of the root of E as a diagonal.

    Args:
        E: Equation with E(0,0) = 0 and E_y(0,0) != 0
        N: Index
        linrep: Precomputed representation to reuse

    Returns:
        f_N in F_p
    """
    if linrep is None:
        linrep = build_dense_linrep(E)
    return linrep.coefficient(N)
