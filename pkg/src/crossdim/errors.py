class DomainError(ValueError):
    """An operation was applied outside its domain (shape mismatch, bad index, ...)."""


class ParseError(ValueError):
    """Malformed matrix input. Carries the 1-based line and column of the offending token."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
