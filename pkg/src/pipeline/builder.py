"""
Engine Builder

Builder pattern for constructing coefficient engines from text or from
already parsed equations.
"""

from typing import Optional, Union
import logging

from src.arith import BiPoly
from src.config import ALGCOEFConfig
from src.errors import InvalidInput
from src.models.problem import Method

from .engine import CoefficientEngine

logger = logging.getLogger(__name__)


class EngineBuilder:
    """
    Builder for CoefficientEngine.

    Usage:
        engine = (
            EngineBuilder()
            .with_config(ALGCOEFConfig.for_production())
            .with_polynomial("y - x - y^2", p=7)
            .with_method("diagonal-fast")
            .build()
        )
    """

    def __init__(self, config: Optional[ALGCOEFConfig] = None):
        self.config = config or ALGCOEFConfig()
        self._equation: Optional[BiPoly] = None
        self._method: Optional[Union[Method, str]] = None
        self._crossover: Optional[int] = None
        self._precompute = False

    def with_config(self, config: ALGCOEFConfig) -> "EngineBuilder":
        """Set configuration."""
        self.config = config
        return self

    def with_polynomial(self, E: Union[BiPoly, str], p: Optional[int] = None) -> "EngineBuilder":
        """
        Set the equation.

        Args:
            E: Parsed polynomial, or text in the CLI grammar
            p: Characteristic, required for text

        Returns:
            self for chaining
        """
        if isinstance(E, str):
            if p is None:
                raise InvalidInput("a prime is required to parse a polynomial")
            from src.cli.parser import parse_poly

            E = parse_poly(E, p)
        elif p is not None and E.field.p != p:
            raise InvalidInput(f"polynomial lives over {E.field}, not F_{p}")
        self._equation = E
        return self

    def with_method(self, method: Union[Method, str]) -> "EngineBuilder":
        """Set the coefficient method."""
        self._method = method
        return self

    def with_crossover(self, crossover: int) -> "EngineBuilder":
        """Override the auto crossover prime."""
        self._crossover = crossover
        return self

    def eager(self) -> "EngineBuilder":
        """Run the precomputation in build()."""
        self._precompute = True
        return self

    def build(self) -> CoefficientEngine:
        """
        Build the engine.

        Returns:
            A CoefficientEngine, precomputed if eager() was requested
        """
        if self._equation is None:
            raise InvalidInput("no polynomial set; call with_polynomial first")
        engine = CoefficientEngine(
            self._equation,
            config=self.config,
            method=self._method,
            crossover=self._crossover,
        )
        if self._precompute:
            engine.precompute()
        logger.info(f"Built {engine.method.value} engine over F_{engine.field.p}")
        return engine
