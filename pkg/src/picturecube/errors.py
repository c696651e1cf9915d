"""Exception hierarchy shared by the whole package."""


class PuzzleError(Exception):
    """Base class for all errors raised by picturecube."""


class MalformedCycleError(PuzzleError, ValueError):
    pass


class BoundExceededError(PuzzleError):
    """A group closure grew past the caller's order bound."""


class UnsupportedSpecError(PuzzleError):
    """The operation is only defined for a particular family of puzzles."""


class UnsolvableError(PuzzleError):
    """The configuration is not in the reachable subgroup."""


class BudgetExceededError(PuzzleError, MemoryError):
    """A search or enumeration would need more memory than allowed."""


class CodeOverflowError(PuzzleError, OverflowError):
    """The board is too large for a 63-bit state code."""


class ConfigFormatError(PuzzleError, ValueError):
    """A configuration file or move word could not be parsed."""
