"""Exception types shared across the toolkit."""


class PreconditionError(ValueError):
    """An operation was called with inputs outside its contract."""


class StructuralError(ValueError):
    """A data structure is internally inconsistent (bad rotation, etc.)."""


class CapacityError(RuntimeError):
    """An exhaustive search would exceed the configured size guard."""


class ViolationError(RuntimeError):
    """An invariant that must hold for valid inputs failed.

    Raised by operations whose correctness rests on properties guaranteed
    upstream (saturating matchings, factor-critical components, ...).  If one
    of these fires, the bug is in the caller's pipeline, not in the input
    data, so it is kept distinct from PreconditionError.
    """


class HallViolationError(ViolationError):
    """A required bipartite matching does not exist.

    Attributes:
        violator: set of vertices whose neighborhood is too small.
    """

    def __init__(self, message, violator):
        super().__init__(message)
        self.violator = frozenset(violator)


class ParseError(ValueError):
    """Malformed instance file; carries 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
