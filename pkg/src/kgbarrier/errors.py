"""Exception types shared across the package."""


class KGBarrierError(Exception):
    """Base class for every error raised by this package."""


class DomainError(KGBarrierError):
    """An argument lies outside the domain an operation supports."""


class ConvergenceError(KGBarrierError):
    """A series or iteration failed to reach the requested tolerance."""


class BranchError(KGBarrierError):
    """Argument sits on a branch cut and no convention was requested."""


class DegenerateError(KGBarrierError):
    """Parameters hit a degenerate configuration (solution basis collapses)."""


class SingularSystemError(KGBarrierError):
    """The boundary-matching system is singular or numerically unusable."""


class StepError(KGBarrierError):
    """Integration step too coarse: flux conservation broke down."""


class ConfigError(KGBarrierError):
    """A sweep configuration file is malformed."""


class ScanError(KGBarrierError):
    """Too many grid points of a sweep failed to evaluate."""
