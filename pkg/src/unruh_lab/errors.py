"""Exception types shared across the package."""


class UnruhLabError(Exception):
    """Base class for every error raised by this package."""


class LayoutError(UnruhLabError, ValueError):
    """Duplicate, unknown, or conflicting subsystem labels."""


class ShapeError(UnruhLabError, ValueError):
    """Operand dimensions do not match."""


class NormalizationError(UnruhLabError, ValueError):
    """A state or matrix violates its norm or trace contract."""


class DomainError(UnruhLabError, ValueError):
    """A parameter lies outside its allowed range.

    ``param`` keeps the offending parameter name so front ends can report it.
    """

    def __init__(self, param: str, message: str):
        super().__init__(f"{param}: {message}")
        self.param = param


class SymmetryError(UnruhLabError, ValueError):
    """A matrix expected to be Hermitian is not."""


class SpectrumError(UnruhLabError, ValueError):
    """An eigenvalue lies below the positive-semidefinite tolerance."""


class ConvergenceError(UnruhLabError, RuntimeError):
    """The iterative eigensolver did not reach its tolerance."""


class SweepPointError(UnruhLabError, RuntimeError):
    """A sweep aborted; the message identifies the offending grid point."""
