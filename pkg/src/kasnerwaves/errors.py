"""Exception types raised across the package.

Every failure mode that callers are expected to catch has its own class;
all inherit from :class:`KasnerError` so a bare ``except KasnerError``
catches anything raised deliberately by this library.
"""


class KasnerError(Exception):
    """Base class for all errors raised by kasnerwaves."""


class ConstraintViolation(KasnerError):
    """Exponent triple fails one of the two Kasner sum rules."""


class NonPositiveTime(KasnerError):
    """An operation requiring t > 0 was given t <= 0."""


class PoleError(KasnerError):
    """log_gamma evaluated at a non-positive integer."""


class NoConvergence(KasnerError):
    """A series hit its term cap before reaching the requested tolerance."""


class IntegerOrderUnsupported(KasnerError):
    """bessel_y with nonzero integer order (not needed, not implemented)."""


class StepUnderflow(KasnerError):
    """ODE step size fell below the machine-scaled floor."""


class MaxStepsExceeded(KasnerError):
    """ODE solver exceeded its step budget."""


class MaxDepthExceeded(KasnerError):
    """Adaptive quadrature exceeded its recursion depth cap."""


class IntegrandSingular(KasnerError):
    """A quadrature sample evaluated to a non-finite value."""


class ComplexInput(KasnerError):
    """A real-only operation received genuinely complex data."""


class WrongClass(KasnerError):
    """Closed-form basis requested for an incompatible exponent class."""


class DegenerateWronskian(KasnerError):
    """Constant matching hit a numerically singular 2x2 system."""


class DomainLimit(KasnerError):
    """Evaluation requested outside the numerically trusted domain."""


class RegimeMismatch(KasnerError):
    """Small-time fit residual failed to improve with integration depth."""


class IllConditionedFit(KasnerError):
    """Phase advances too little over the fit window to separate c1, c2."""


class ZeroMomentum(KasnerError):
    """An operation requiring a nonzero momentum got the zero vector."""


class ZeroDirection(KasnerError):
    """Geodesic initial spatial direction is the zero vector."""


class BadOrdering(KasnerError):
    """Redshift endpoints must satisfy 0 < t_p < t_q."""
