class InvalidInputError(ValueError):
    """Raised when an argument violates the documented preconditions."""


class SpecParseError(InvalidInputError):
    """A bundle or splitting-type string failed to parse.

    ``line`` is 1-based (``None`` for inline input), ``field`` names the
    record field that was being read when the error occurred.
    """

    def __init__(self, message, line=None, field=None):
        self.message = message
        self.line = line
        self.field = field
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.field is not None:
            where.append(f"field '{self.field}'")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message


class InvariantViolation(RuntimeError):
    """An internal consistency check failed. Always a bug."""
