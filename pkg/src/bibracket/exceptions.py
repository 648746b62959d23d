"""Exception hierarchy shared by all bibracket modules."""


class BiBracketError(Exception):
    """Base class for all errors raised by bibracket."""


class WordSyntaxError(BiBracketError, ValueError):
    """Text could not be parsed as a word or linear combination."""

    def __init__(self, text: str, column: int | None = None, reason: str = ""):
        self.text = text
        self.column = column
        where = f" at column {column}" if column is not None else ""
        detail = f": {reason}" if reason else ""
        super().__init__(f"cannot parse {text!r}{where}{detail}")


class InvalidIndexError(BiBracketError, ValueError):
    """An index or numeric argument lies outside its admissible range."""


class NotInZAlphabetError(BiBracketError, ValueError):
    """An xy-word does not decompose into letters z_j = x^(j-1) y."""


class LimitNotCoveredError(BiBracketError):
    """The q -> 1 limit formula does not apply to this index."""


class DegreeCapExceeded(BiBracketError):
    """A bounded polynomial expansion produced a term above its degree cap."""


class PrecisionTooLowError(BiBracketError):
    """The requested precision cannot separate the generators of a weight."""


class PathMismatchError(BiBracketError):
    """Symbolic and numeric computations of the same quantity disagree."""


# Errors caused by user input; the CLI reports these with exit code 2
USAGE_ERRORS: tuple[type[BiBracketError], ...] = (
    WordSyntaxError,
    InvalidIndexError,
    NotInZAlphabetError,
    PrecisionTooLowError,
    LimitNotCoveredError,
)
