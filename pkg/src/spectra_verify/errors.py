"""Exception types shared across the package."""


class SpectraVerifyError(Exception):
    """Base class for all package-specific errors."""


class ContractViolation(SpectraVerifyError, ValueError):
    """An argument broke a documented precondition."""


class UnsupportedSizeError(SpectraVerifyError, ValueError):
    """Input exceeds a documented size bound (graph6 n > 62, canonical n, ...)."""


class Graph6Error(SpectraVerifyError, ValueError):
    """Malformed graph6 text; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte position {position})")
        self.position = position


class ConvergenceError(SpectraVerifyError, RuntimeError):
    """Eigensolver failed to reach its off-diagonal target.

    Carries the final off-diagonal norm and the number of sweeps performed.
    """

    def __init__(self, message: str, off_norm: float, sweeps: int):
        super().__init__(f"{message} (off-diagonal norm {off_norm:.3e} after {sweeps} sweeps)")
        self.off_norm = off_norm
        self.sweeps = sweeps


class NegativeEigenvalueError(SpectraVerifyError, RuntimeError):
    """A Gram-matrix spectrum came back with an eigenvalue below -clamp_tol.

    Signals a broken upstream solve, not a property of the input graph.
    """


class CanonicalBudgetError(SpectraVerifyError, RuntimeError):
    """Canonical-form search exceeded its node budget."""
