"""Exception types shared across the package."""


class ConicalAbError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(ConicalAbError, ValueError):
    """Invalid run configuration (CLI exit code 2)."""


class UnsupportedChannelError(ConicalAbError, ValueError):
    """The requested operation does not apply to this angular channel."""


class NoBoundStateError(ConicalAbError):
    """The channel supports no bound state (CLI exit code 3).

    Carries a human-readable ``reason`` so front ends can report why.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class MatchingPoleError(ConicalAbError):
    """The matching residual was evaluated at a pole of the cotangent.

    Callers doing root searches should bracket between adjacent poles.
    """


class ComplexEnergyError(ConicalAbError):
    """A closed-form energy evaluated to a complex number.

    The offending value is kept on ``value`` so audit reports can show it.
    """

    def __init__(self, value: complex, detail: str):
        super().__init__(detail)
        self.value = value
        self.detail = detail


class NumericalError(ConicalAbError, RuntimeError):
    """A numerical procedure failed (bracketing, quadrature; CLI exit 4)."""
