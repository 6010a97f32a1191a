"""Exception types raised across the package."""


class ContractViolation(ValueError):
    """An operation was called with arguments outside its domain."""


class LooplessHypothesisError(ContractViolation):
    """The operation is only defined for loopless graphs."""

    def __init__(self, operation, loops=()):
        self.operation = operation
        self.loops = tuple(loops)
        msg = f"{operation} requires a loopless graph"
        if self.loops:
            msg += f" (loop edges: {', '.join(map(str, self.loops))})"
        super().__init__(msg)


class GraphParseError(ValueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class InterpolationInconsistencyError(ArithmeticError):
    """Over-determined interpolation data does not fit one polynomial."""


class GuardExceeded(RuntimeError):
    """An enumeration would exceed its configured size guard."""
