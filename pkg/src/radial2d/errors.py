"""Exception types raised across the package.

Each carries a short machine-readable ``code`` that the CLI prints on its
single error line.
"""


class Radial2DError(Exception):
    code = "ERROR"


class ParameterError(Radial2DError, ValueError):
    """Invalid physical or numerical input (bad sign, non-finite, rho <= 0)."""

    code = "INVALID_PARAMETER"


class NoBoundStateError(Radial2DError, ValueError):
    """The requested potential has no normalizable ansatz solution."""

    code = "NO_BOUND_STATE"


class ConvergenceError(Radial2DError, RuntimeError):
    """Bisection hit its iteration cap before the bracket closed."""

    code = "NO_CONVERGENCE"

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class AccuracyError(Radial2DError, RuntimeError):
    """Quadrature could not certify the requested accuracy."""

    code = "ACCURACY_NOT_REACHED"
