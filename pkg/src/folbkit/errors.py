"""Exception hierarchy shared by all modules."""


class FolbkitError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""

    exit_code = 2


class UsageError(FolbkitError):
    exit_code = 1


class DisconnectedGraph(FolbkitError):
    pass


class DisconnectedPattern(FolbkitError):
    pass


class BadParams(UsageError):
    pass


class GraphFormatError(UsageError):
    pass


class MissingData(FolbkitError):
    pass


class NotAvailable(FolbkitError):
    pass


class NotPartialCube(FolbkitError):
    pass


class ResourceBudgetExceeded(FolbkitError):
    pass


class FormulaError(UsageError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message, pos=None, expected=()):
        self.pos = pos
        self.expected = tuple(expected)
        detail = message
        if pos is not None:
            detail = f"{message} at position {pos}"
        if self.expected:
            detail += "; expected one of: " + ", ".join(self.expected)
        super().__init__(detail)


class UnknownMacro(FormulaError):
    pass


class ArityMismatch(FormulaError):
    pass


class UnboundVariable(FormulaError):
    pass


class CyclicMacro(FormulaError):
    pass
