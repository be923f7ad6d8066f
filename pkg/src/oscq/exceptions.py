"""Exception types raised by :mod:`oscq`."""


class OscqError(Exception):
    """Base class for all package errors."""


class DomainError(OscqError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ConvergenceError(OscqError, ArithmeticError):
    """An iterative method failed to reach its tolerance."""


class DegenerateSaddleError(OscqError, ArithmeticError):
    """The second derivative of the phase vanishes at a saddle point."""
