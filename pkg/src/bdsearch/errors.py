"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed.

    Carries the 1-based line number where parsing failed.
    """

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class MeterUsageError(ValueError):
    """Misuse of a workspace meter, e.g. freeing an allocation twice."""


class StackUnderflow(Exception):
    """Popping reached below the retained window of a blocked stack.

    Entries still exist logically (they were discarded to save space), so the
    caller must reconstruct before continuing.  ``live_entries`` is the number
    of logical entries that have to be replayed; ``top_tag`` is the tag the
    deepest discarded block's last entry carried when it was discarded.
    """

    def __init__(self, live_entries: int, top_tag: int = 0) -> None:
        super().__init__(f"window empty with {live_entries} discarded entries")
        self.live_entries = live_entries
        self.top_tag = top_tag


class StackEmpty(Exception):
    """The logical stack is truly empty; there is nothing to reconstruct."""


class DictionaryFullError(RuntimeError):
    """Insertion into a compact dictionary that is at capacity."""


class InternalStateError(RuntimeError):
    """A traversal's bookkeeping contradicted itself (indicates a bug)."""
