"""Exception hierarchy shared by every module of the package."""


class LogHankelError(Exception):
    """Base class for all package errors."""


class InputError(LogHankelError, ValueError):
    """Malformed or out-of-range input (orders, parameters, configs)."""


class OrderMismatchError(InputError):
    pass


class NormalizationError(InputError):
    """A series lacks the normalization an operation relies on."""


class SingularSeriesError(LogHankelError, ZeroDivisionError):
    pass


class DomainError(InputError):
    """A closed-form expression was evaluated at one of its poles."""


class PoleError(LogHankelError, ZeroDivisionError):
    pass


class BracketError(LogHankelError, ArithmeticError):
    """Root bracket without a sign change."""
