"""Exception types shared across the package.

All argument validation raises :class:`DomainError` (a ``ValueError``), so
callers can catch either the package type or the builtin.  Numerical
failures where two refinement levels disagree raise :class:`AccuracyError`
carrying both computed values.
"""


class BallharmError(Exception):
    """Base class for all package errors."""


class DomainError(BallharmError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class IncompatibleExpansionError(BallharmError, ValueError):
    """Two expansions disagree in dimension, kind, or pole."""


class UnsupportedBasisError(BallharmError, ValueError):
    """Explicit orthonormal bases exist only for dimensions 2 and 3."""


class UsageError(BallharmError, ValueError):
    """An operation was called in a way its contract does not cover."""


class AccuracyError(BallharmError, RuntimeError):
    """Two refinement levels of a quadrature disagree beyond tolerance.

    Attributes
    ----------
    coarse, fine : float
        The two computed values.
    rtol : float
        The relative tolerance that was requested.
    """

    def __init__(self, message, coarse, fine, rtol):
        super().__init__(
            f"{message}: coarse={coarse!r}, fine={fine!r}, requested rtol={rtol:g}"
        )
        self.coarse = coarse
        self.fine = fine
        self.rtol = rtol
