"""Exception hierarchy shared by every module."""


class GraftError(ValueError):
    """Base class for all errors raised by graftkl."""


class InputError(GraftError):
    """Malformed arguments: unknown vertices, foreign edge ids, overlapping parts."""


class NotAGraftError(GraftError):
    """A terminal set has odd parity on some connected component."""

    def __init__(self, component, count):
        self.component = tuple(component)
        self.count = count
        super().__init__(
            f"component {{{', '.join(map(str, self.component))}}} "
            f"contains {count} terminals (odd)"
        )


class DomainError(GraftError):
    """A quantity was requested outside the domain where it is defined."""


class EnumerationLimitError(GraftError):
    """An exhaustive oracle refused an instance above its configured bound."""


class ParseError(GraftError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")
