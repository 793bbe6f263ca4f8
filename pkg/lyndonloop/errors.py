class ConfigurationError(ValueError):
    """Invalid type/rank combination, window bounds or command-line value"""


class DomainError(ValueError):
    """A value outside the domain of an operation, e.g. a vector that is not a positive root"""


class PreconditionError(ValueError):
    """An operation was called on an argument violating its precondition"""


class TruncationError(ValueError):
    """
    Raised when a window of exponents cannot be certified

    Parameters
    ----------
    message : str
        Description of the failure

    window : tuple or None
        The certifiable window, or a wider window that is worth retrying with
    """

    def __init__(self, message, window=None):
        super().__init__(message)
        self.window = window


class ConsistencyError(ValueError):
    """An internal cross-check failed"""


class UnsupportedClosedFormError(ValueError):
    """Closed forms only exist for the classical types A, B, C and D"""


class ZeroElementError(ValueError):
    """The zero element has no leading word"""


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at one of its poles"""
