"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An operation was called outside its stated preconditions."""


class DivergenceError(ArithmeticError):
    """An improper integral failed to converge under refinement."""


class ResolutionError(RuntimeError):
    """The grid cannot resolve the requested scale."""


class DiscretizationAnomaly(RuntimeError):
    """The discrete operator disagrees qualitatively with the continuum
    (e.g. spurious extra negative eigenvalues)."""


class BlowupError(RuntimeError):
    """Non-finite field values appeared during time evolution."""

    def __init__(self, t, message=None):
        self.t = t
        super().__init__(message or f"field blew up at t = {t:.6g}")


class FitError(RuntimeError):
    """Modulation fit failed to converge."""


class OutOfRegimeError(RuntimeError):
    """Scale ratios are outside the validity regime of an asymptotic model."""


class ConstructionError(RuntimeError):
    """A constructed auxiliary object failed its property checks."""

    def __init__(self, message, failed_property=None):
        self.failed_property = failed_property
        super().__init__(message)


class UndefinedScaleError(RuntimeError):
    """The energy-based scale is not well defined for this state."""


class ValidationError(ValueError):
    """A configuration document violates a guard."""
