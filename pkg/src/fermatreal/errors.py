"""Exception hierarchy for the fermatreal package."""


class FermatRealError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FermatRealError):
    """An argument lies outside the mathematical domain of the operation."""


class NotInvertible(FermatRealError):
    """Inversion was requested for a number with zero standard part."""


class DivisionByZero(FermatRealError):
    """Division by the zero element."""


class NoExactQuotient(FermatRealError):
    """Division by an infinitesimal has no exact quotient in the ring."""


class NotZeroDivisor(FermatRealError):
    """A zero-divisor witness was requested for a unit or for zero."""


class PreconditionViolated(FermatRealError):
    """A documented precondition of the operation does not hold."""


class ApproximationTie(FermatRealError):
    """Two inexact scalars are too close to order at the working precision."""


class NotInfinitesimal(FermatRealError):
    """The operation is defined on infinitesimals only."""


class IndexOutOfRange(FermatRealError):
    """A term index does not address a summand of the decomposition."""


class ZeroBase(FermatRealError):
    """Zero cannot be raised to a non-positive exponent."""


class UnknownFunction(FermatRealError):
    """No built-in smooth function of that name exists."""


class UnsupportedExponent(FermatRealError):
    """The fractional derivative of this power-function term is not representable."""


class UnsupportedAlpha(FermatRealError):
    """The differentiation order lies outside the supported range (0, 1]."""


class UnknownSuite(FermatRealError):
    """No self-check suite of that name exists."""


class ExprSyntaxError(FermatRealError):
    """Malformed expression text.  Carries 1-based line and column."""

    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class NameLookupError(FermatRealError):
    """An identifier is not bound in the evaluation session."""


class ParseError(FermatRealError):
    """Malformed serialized value."""
