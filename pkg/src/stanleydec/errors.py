"""Exception types shared by all modules."""


class StanleyError(Exception):
    """Base class for all library errors."""


class MalformedInputError(StanleyError, ValueError):
    """Input violates a structural invariant (bad exponent vector etc.)."""


class ContextMismatchError(StanleyError, ValueError):
    """Operands live in different ambient rings."""


class ContainmentError(StanleyError, ValueError):
    """A required ideal containment (J inside I) fails."""


class ZeroModuleError(StanleyError, ValueError):
    """The quotient I/J is the zero module; the operation is undefined."""


class VerificationError(StanleyError, ValueError):
    """A decomposition that was required to be valid is not."""


class BudgetExceededError(StanleyError, RuntimeError):
    """The search node budget ran out before an exact answer was certified."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class ParseError(StanleyError, ValueError):
    """Text input could not be parsed; carries a column offset."""

    def __init__(self, message, column=None):
        if column is not None:
            message = "%s (column %d)" % (message, column)
        super().__init__(message)
        self.column = column
