"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad table shape, bad degree, ...)."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InputError):
    """A construction's hypothesis does not hold.

    ``element`` is the smallest offending carrier index and ``violations``
    holds every offending ``(element, value)`` pair.
    """

    def __init__(self, message, element=None, violations=()):
        self.element = element
        self.violations = tuple(violations)
        super().__init__(message)


class ResourceBudgetError(RuntimeError):
    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class AxiomError(InputError):
    """Tables parsed but do not form a hemiring."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("not a hemiring: " + "; ".join(str(v) for v in self.violations))
