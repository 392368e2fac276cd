"""Exception hierarchy for trigbase."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .report import CheckReport


class TrigBaseError(Exception):
    """Base class for all trigbase errors."""


# Arithmetic and domain errors

class NotDivisible(TrigBaseError, ValueError):
    """Exact polynomial division left a remainder or a non-integer quotient."""


class NotASquare(TrigBaseError, ValueError):
    """Polynomial is not the square of an integer polynomial."""


class ConstantTermZero(TrigBaseError, ValueError):
    """Series has no multiplicative inverse."""


class InnerConstantNonzero(TrigBaseError, ValueError):
    """Inner series of a composition must have constant term zero."""


class NegativeK(TrigBaseError, ValueError):
    """Binomial coefficient requested with a negative lower index."""


class DegenerateDenominator(TrigBaseError, ValueError):
    """Fuss-Catalan number with mp + r = 0 and m > 0."""


class OutOfTriangle(TrigBaseError, IndexError):
    """Index lies above the diagonal of a triangular array."""


class NonIntegerCoefficient(TrigBaseError, ValueError):
    """A family that must have integer coefficients produced a fraction."""


class NotInvertible(TrigBaseError, ValueError):
    """Series has no compositional inverse (f(0) != 0 or f'(0) == 0)."""


class NotProper(TrigBaseError, ValueError):
    """Riordan array is not proper (g(0) == 0)."""


class OrderMismatch(TrigBaseError, ValueError):
    """Riordan operands or applied series carry incompatible orders."""


class NotReal(TrigBaseError, ArithmeticError):
    """A Gaussian expansion that must be real has an imaginary part."""


# Verification outcomes

class CheckFailed(TrigBaseError):
    """A verification found a counterexample.

    The failing CheckReport is attached; its first failure is the
    located counterexample.
    """

    def __init__(self, report: CheckReport):
        self.report = report
        first = report.failures[0] if report.failures else None
        detail = f": {first}" if first is not None else ""
        super().__init__(f"{report.name} failed{detail}")


class CheckSkipped(TrigBaseError):
    """A check cannot run at the requested size; recorded as not tested."""


class ConjectureViolation(TrigBaseError):
    """The factor battery found a violation at index n."""

    def __init__(self, n: int, reason: str):
        self.n = n
        self.reason = reason
        super().__init__(f"conjecture violated at n={n}: {reason}")


# OEIS errors

class NotAvailableOffline(TrigBaseError, LookupError):
    """Sequence is neither bundled nor cached and network access is off."""


class NetworkError(TrigBaseError, OSError):
    """Fetching a b-file over HTTP failed."""


class ParseError(TrigBaseError, ValueError):
    """Malformed b-file line."""

    def __init__(self, line_no: int, line: str, source: str = "<b-file>"):
        self.line_no = line_no
        self.line = line
        super().__init__(f"{source}:{line_no}: cannot parse {line!r}")


class Mismatch(TrigBaseError, AssertionError):
    """Generated sequence disagrees with the OEIS terms."""

    def __init__(self, index: int, expected: Any, got: Any):
        self.index = index
        self.expected = expected
        self.got = got
        super().__init__(f"index {index}: expected {expected}, got {got}")
