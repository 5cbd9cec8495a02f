from common import const


class ToolkitError(Exception):
    exit_code = const.EXIT_UNEXPECTED


class ValidationError(ToolkitError):
    exit_code = const.EXIT_VALIDATION


class ParseError(ValidationError):
    def __init__(self, path, line, message):
        self.path = path
        self.line = line
        super().__init__("{}:{}: {}".format(path, line, message))


class DegenerateHistory(ValidationError):
    pass


class ZeroMass(ValidationError):
    pass


class DivisionByZero(ValidationError):
    pass


class StructureViolation(ToolkitError):
    exit_code = const.EXIT_STRUCTURE


class NonTerminating(ToolkitError):
    """The day cap was hit before the requested event counts were produced.

    `outcome` holds whatever was simulated up to the cap.
    """

    exit_code = const.EXIT_RUNTIME_CAP

    def __init__(self, message, outcome=None):
        super().__init__(message)
        self.outcome = outcome


class IterationCap(ToolkitError):
    exit_code = const.EXIT_RUNTIME_CAP


class ZeroVariance(ToolkitError):
    pass
