"""Exception types shared across the package."""


class InfeasibleSizeError(ValueError):
    """A problem instance exceeds a configured size cap (qubits, gates, enumeration bits)."""


class InconclusiveError(RuntimeError):
    """The Ramsey sweep hit its N cap without a zero verdict."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript
