"""Exception types shared across the package."""


class PinwheelError(Exception):
    """Base class for all package-specific errors."""


class SelfCheckError(PinwheelError):
    """A construction-time consistency check failed; the build is unusable."""


class LimitExceededError(PinwheelError):
    """A requested computation exceeds the configured resource bound."""


class InsufficientContextError(PinwheelError):
    """A patch operation ran into the boundary of its finite context."""


class StabilizationError(PinwheelError):
    """An enumeration did not stabilize within the given level budget."""


class SamplingError(PinwheelError):
    """A sampled loop is too coarse or discontinuous for index computation."""
