"""Exception types shared across the package."""


class TheoremViolation(AssertionError):
    """Two independently computed sides of a proven equivalence disagree.

    This can only mean an implementation bug (or a counterexample to a
    published theorem). The CLI maps it to exit code 1.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PresentationError(ValueError):
    """Malformed presentation text, with a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
