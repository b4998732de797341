class CentrumError(Exception):
    """Base class for all errors raised by centrum."""


class ValidationError(CentrumError, ValueError):
    """Input data violates a schema or domain invariant."""


class RangeError(CentrumError, ValueError):
    """A requested year lies outside the corpus range."""


class UndefinedCorrelationError(CentrumError, ValueError):
    """Rank correlation is undefined (constant input)."""
