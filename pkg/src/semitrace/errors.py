"""Exception hierarchy shared by all modules."""


class SemitraceError(Exception):
    """Base class for library errors."""


class EmptyGenerators(SemitraceError, ValueError):
    pass


class GcdNotOne(SemitraceError, ValueError):
    pass


class NotAMember(SemitraceError, ValueError):
    pass


class BoundTooLarge(SemitraceError, ValueError):
    pass


class MixedSemigroups(SemitraceError, ValueError):
    pass


class ZeroDivisorIdeal(SemitraceError, ValueError):
    pass


class NotIntegral(SemitraceError, ValueError):
    pass


class NotInsideR(SemitraceError, ValueError):
    def __init__(self, message, shift_needed=None):
        super().__init__(message)
        self.shift_needed = shift_needed


class DegreeBoundTooSmall(SemitraceError):
    def __init__(self, message, suggested=None):
        super().__init__(message)
        self.suggested = suggested


class HypothesisFailed(SemitraceError):
    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class ParseError(SemitraceError, ValueError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.message = message
        self.line = line
        self.column = column
