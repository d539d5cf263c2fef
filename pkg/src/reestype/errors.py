"""Exception hierarchy."""


class ReesError(Exception):
    """Base class for library errors."""


class ContextMismatchError(ReesError, ValueError):
    pass


class PolynomialSyntaxError(ReesError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ReesError, KeyError):
    def __init__(self, name, position=None):
        super().__init__(name)
        self.name = name
        self.position = position

    def __str__(self):
        where = f" at position {self.position}" if self.position is not None else ""
        return f"unknown variable {self.name!r}{where}"


class ResourceLimitExceeded(ReesError):
    """A Groebner computation ran past its time or size budget."""


class DegenerateIdealError(ReesError, ValueError):
    pass


class ConstraintError(ReesError, ValueError):
    """Parameters violate a family or Euclid precondition."""
