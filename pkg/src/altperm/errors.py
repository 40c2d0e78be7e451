"""Exception hierarchy shared by every module."""


class AltPermError(Exception):
    """Base class for all errors raised by altperm."""


class InvalidParams(AltPermError, ValueError):
    pass


class ParamMismatch(AltPermError, ValueError):
    pass


class IndexOutOfRange(AltPermError, IndexError):
    pass


class NotAlternating(AltPermError, ValueError):
    pass


class OddLength(AltPermError, ValueError):
    pass


class ParseError(AltPermError, ValueError):
    pass


class NonIntegralHalving(AltPermError, ArithmeticError):
    """Raised when a polynomial that must have even coefficients does not."""


class CapExceeded(AltPermError, RuntimeError):
    pass


class UnknownSuite(AltPermError, ValueError):
    pass
