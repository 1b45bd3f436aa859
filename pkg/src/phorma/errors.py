"""Exception types raised by the phorma package."""


class PhormaError(Exception):
    """Base class for all phorma errors."""


class ExprSyntaxError(PhormaError, ValueError):
    """Malformed restriction expression.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EnumerationLimitError(PhormaError, ValueError):
    """A brute-force enumeration would exceed its configured limit."""


class NotAMemberError(PhormaError, ValueError):
    """A vector is not a member of the restricted index set."""


class RankRangeError(PhormaError, IndexError):
    """A rank lies outside ``[0, total)``."""


class TableLookupError(PhormaError, KeyError):
    """A sequence is not stored in the vertex table."""
