"""
ALGCOEF Errors

Named exceptions raised by the arithmetic substrate and the coefficient
pipelines. Input problems derive from ``ValueError`` so callers can treat
them uniformly; certificate failures derive from ``ArithmeticError`` and
signal a bug rather than bad input.
"""

from typing import Optional


class ALGCOEFError(Exception):
    """Base class for all ALGCOEF errors."""


# =============================================================================
# Input errors
# =============================================================================


class InvalidInput(ALGCOEFError, ValueError):
    """Problem instance violates a precondition (E(0,0), E_y(0,0), degrees)."""


class ParseError(InvalidInput):
    """Polynomial or index text does not follow the grammar."""

    def __init__(self, message: str, position: Optional[int] = None, text: str = ""):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class NonconformingExponent(ParseError):
    """Exponent is negative or too large to expand."""


class BadDigit(ALGCOEFError, ValueError):
    """Section digit outside [0, p)."""


class DegreeTooSmall(ALGCOEFError, ValueError):
    """Modular power requested below the modulus degree."""


class IndexTooLow(ALGCOEFError, ValueError):
    """Series index below the valuation of the expansion."""


class ZeroInverse(ALGCOEFError, ZeroDivisionError):
    """Inverse of zero requested in the prime field."""


class NotAUnit(ALGCOEFError, ValueError):
    """Series inversion of a power series with zero constant term."""


# =============================================================================
# Certificate failures
# =============================================================================


class CertificateFailure(ALGCOEFError, ArithmeticError):
    """An exactness check that theory guarantees did not hold."""


class NonPolynomialResult(CertificateFailure):
    """Denominator did not divide the numerator of a diagonal."""


class MahlerDerivationError(CertificateFailure):
    """Mahler equation derivation left its proven bounds."""
