"""
ALGCOEF: N-th coefficients of algebraic power series over prime fields

- Arithmetic: F_p scalars, univariate/bivariate polynomials, sections
- Mahler: Mahler equation and section stepping
- Diagonal: Furstenberg representation and digit matrices
- Partial powering: useful diagonals of b^(p-1) in quasi-linear time
- Oracle: Newton and undetermined-coefficient expansions, Catalan numbers
"""

from src.config import ALGCOEFConfig
from src.pipeline import CoefficientEngine, EngineBuilder, select_method

__version__ = "1.0.0"

__all__ = [
    "ALGCOEFConfig",
    "CoefficientEngine",
    "EngineBuilder",
    "select_method",
]
