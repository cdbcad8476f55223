"""
Coefficient Engine

Orchestrator over the four coefficient methods. The method's precomputation
runs once, on first query, and is shared by every later query.
"""

from typing import TYPE_CHECKING, List, Optional, Union
import logging
import threading

from src.arith import BiPoly, BigIndex, Fp
from src.config import ALGCOEFConfig
from src.diagonal import LinearRep, build_dense_linrep
from src.errors import InvalidInput
from src.mahler import IndexTrace, MahlerPipeline
from src.models.problem import Method, validate_equation
from src.oracle import expand_newton
from src.partialpow import build_sparse_linrep
from src.utils.timing import Timer

if TYPE_CHECKING:
    from src.evaluation.ops import OpCounter

logger = logging.getLogger(__name__)


def select_method(
    p: int,
    requested: Union[Method, str] = Method.AUTO,
    crossover: int = 64,
) -> Method:
    """
    Resolve the auto method.

    Args:
        p: Characteristic
        requested: Method asked for
        crossover: auto picks diagonal-fast iff p > crossover

    Returns:
        A concrete method (never AUTO)
    """
    try:
        method = Method(requested)
    except ValueError:
        raise InvalidInput(f"unknown method {requested!r}")
    if method != Method.AUTO:
        return method
    return Method.DIAGONAL_FAST if p > crossover else Method.DIAGONAL


class CoefficientEngine:
    """
    f_N for the root of one equation by one method.

    Usage:
        engine = CoefficientEngine(E, method="diagonal-fast")
        engine.coefficient("10^50")
    """

    def __init__(
        self,
        E: BiPoly,
        config: Optional[ALGCOEFConfig] = None,
        method: Union[Method, str, None] = None,
        crossover: Optional[int] = None,
    ):
        """
        Initialize the engine; nothing is precomputed yet.

        Args:
            E: Equation with E(0,0) = 0 and E_y(0,0) != 0
            config: Configuration (defaults to ALGCOEFConfig())
            method: Requested method (defaults to config.default_method)
            crossover: Overrides config.fast_crossover_p
        """
        self.config = config or ALGCOEFConfig()
        validate_equation(E)
        self.E = E
        self.field = E.field
        requested = method or self.config.default_method
        if crossover is None:
            crossover = self.config.fast_crossover_p
        self.method = select_method(self.field.p, requested, crossover)
        self.requested = Method(requested)

        self._linrep: Optional[LinearRep] = None
        self._mahler: Optional[MahlerPipeline] = None
        self._ready = False
        self._lock = threading.Lock()
        self.precompute_ms = 0.0
        logger.debug(f"Engine for p = {self.field.p}: {self.requested.value} -> {self.method.value}")

    @property
    def is_ready(self) -> bool:
        return self._ready

    @property
    def linrep(self) -> LinearRep:
        """The linear representation of the diagonal methods."""
        if self.method not in (Method.DIAGONAL, Method.DIAGONAL_FAST):
            raise InvalidInput(f"method {self.method.value} has no linear representation")
        self.precompute()
        return self._linrep

    @property
    def mahler(self) -> MahlerPipeline:
        if self.method != Method.MAHLER:
            raise InvalidInput(f"method {self.method.value} has no Mahler data")
        self.precompute()
        return self._mahler

    def precompute(self) -> "CoefficientEngine":
        """Run the method's precomputation once (thread-safe)."""
        with self._lock:
            if self._ready:
                return self
            with Timer(f"{self.method.value} precompute") as timer:
                cache = self.config.matrix_cache_size
                if self.method == Method.MAHLER:
                    self._mahler = MahlerPipeline(self.E)
                elif self.method == Method.DIAGONAL:
                    self._linrep = build_dense_linrep(self.E, cache_size=cache)
                elif self.method == Method.DIAGONAL_FAST:
                    self._linrep = build_sparse_linrep(self.E, cache_size=cache)
            self.precompute_ms = timer.elapsed_ms
            self._ready = True
        logger.info(f"Precomputation for {self.method.value} took {self.precompute_ms:.1f} ms")
        return self

    def coefficient(
        self,
        N: Union[BigIndex, int, str],
        counter: Optional["OpCounter"] = None,
        trace: Optional[IndexTrace] = None,
    ) -> Fp:
        """
        f_N by the resolved method.

        Args:
            N: Index
            counter: Optional operation tally
            trace: Optional Mahler index record (mahler method only)
        """
        N = BigIndex.coerce(N)
        self.precompute()
        if self.method == Method.NAIVE:
            n = int(N)
            prefix = expand_newton(self.E, max(n + 1, self.config.newton_min_precision))
            if counter is not None:
                counter.count("newton_step", prefix.iterations)
            return prefix.coefficient(n)
        if self.method == Method.MAHLER:
            if counter is not None and trace is None:
                trace = IndexTrace(self.field.p)
            value = self._mahler.coefficient(N, trace)
            if counter is not None:
                counter.count("section_step", trace.section_steps)
            return value
        return self._linrep.coefficient(N, counter)

    def coefficients(self, n: int) -> List[Fp]:
        """f_0, ..., f_{n-1}."""
        if n < 0:
            raise InvalidInput(f"count must be nonnegative, got {n}")
        if n == 0:
            return []
        self.precompute()
        if self.method == Method.NAIVE:
            prefix = expand_newton(self.E, max(n, self.config.newton_min_precision))
            return [prefix.coefficient(k) for k in range(n)]
        if self.method == Method.MAHLER:
            return self._mahler.coefficients(n)
        return self._linrep.coefficients_up_to(n)
