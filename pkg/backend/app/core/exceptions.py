"""
Domain exceptions for the CCIC toolkit.

Every error raised on purpose by the toolkit derives from CCICError so
callers (CLI, sweeps) can separate domain failures from programming errors.
"""


class CCICError(Exception):
    """Base class for all toolkit errors."""
    pass


class PreconditionError(CCICError, ValueError):
    """Raised when an operation is called outside its stated domain."""
    pass


class RegimeMismatchError(PreconditionError):
    """Raised when (S, I, C) do not satisfy the conditions of the requested regime."""
    pass


class DegenerateCovarianceError(CCICError):
    """Raised when a conditioning covariance block is singular."""
    pass


class NotPositiveSemidefiniteError(CCICError):
    """Raised when a covariance specification is not PSD within tolerance."""
    pass


class UnboundedRegionError(CCICError):
    """Raised when a 2-D rate polytope has no bound along an axis."""
    pass


class InfeasibleSystemError(CCICError):
    """Raised when a half-space system is found to be empty."""
    pass


class DimensionTooLargeError(CCICError):
    """Raised when vertex enumeration is asked for too many dimensions."""
    pass


class GeometryError(CCICError):
    """Raised when a projected region cannot be expressed as a rate polytope."""
    pass


class AbsentMessageError(CCICError):
    """Raised when a DPC coefficient is requested for a message with no power."""
    pass


class RegimeProviderError(CCICError):
    """Raised when a regime provider cannot be loaded."""
    pass
