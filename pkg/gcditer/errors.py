""" Exceptions raised by the gcditer engines.

Every exception carries the process exit status the command line runner
should report for it.
"""


class GcdIterError(Exception):
    """ Base class for all gcditer failures """
    exit_code = 1


class PreconditionError(GcdIterError, ValueError):
    """ An operation was called with inputs outside its domain """
    exit_code = 2

    def __init__(self, message, parameter=None):
        self.parameter = parameter
        if parameter:
            message = f"{parameter}: {message}"
        super().__init__(message)


class ParseError(PreconditionError):
    """ Text input could not be parsed
    Args:
        message (str): what went wrong
        text (str): the full input text
        position (int): offset into `text` where parsing failed
        parameter (str): name of the command line parameter, if known
    """

    def __init__(self, message, text='', position=0, parameter=None):
        self.reason = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}",
                         parameter)


class UndefinedGcdError(PreconditionError):
    """ gcd (or content) requested for inputs that are all zero """


class StructuralFailure(GcdIterError):
    """ An internal identity failed. This falsifies the implementation, not
    the mathematics, so it is reported separately from bad input.
    """
    exit_code = 3

    def __init__(self, message, k=None):
        self.k = k
        if k is not None:
            message = f"{message} (k={k})"
        super().__init__(message)


class TheoremViolation(StructuralFailure):
    """ A proven statement failed to hold on computed data """
