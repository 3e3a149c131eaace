"""Exception hierarchy shared by all modules."""


class KnotError(Exception):
    """Base class for every error raised by the package."""


class MalformedCode(KnotError, ValueError):
    pass


class SignMismatch(MalformedCode):
    pass


class UnknownChord(KnotError, LookupError):
    pass


class InvalidInstance(KnotError, ValueError):
    """A move instance does not match the diagram it is applied to."""


class BudgetExceeded(KnotError):
    pass


class WrongComponentCount(KnotError, ValueError):
    pass


class NotInFiltrationLevel(KnotError, ValueError):
    pass


class ArityMismatch(KnotError, ValueError):
    pass


class Mismatch(KnotError, ValueError):
    """Operands of a module operation live in different modules."""


class InvariantViolation(KnotError, RuntimeError):
    """A computed value breaks a proven property; indicates a bug."""
