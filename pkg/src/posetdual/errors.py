"""Exception types shared across the package."""


class PosetDualError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateElementError(PosetDualError):
    pass


class UnknownElementError(PosetDualError):
    pass


class CycleDetectedError(PosetDualError):
    """Antisymmetry violation; carries one offending cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        a, b = self.cycle
        super().__init__(f"cycle detected: {a} <= {b} and {b} <= {a}")


class TooLargeError(PosetDualError):
    """A configured size cap was exceeded."""


class BaseMismatchError(PosetDualError):
    """Operands were built over different base posets or lattices."""


class LemmaViolationError(PosetDualError):
    """A structural fact that must hold was contradicted.

    This always signals an implementation bug; the counterexample is kept
    for diagnosis.
    """

    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)


class NoWitnessError(PosetDualError):
    """No base element matches the given homomorphism kernel."""


class ParseError(PosetDualError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
