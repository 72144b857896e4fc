"""Exception hierarchy with CLI exit codes."""


class SeqcError(Exception):
    """Base error. ``exit_code`` is what the CLI exits with."""

    exit_code: int = 1


class SequenceParseError(SeqcError, ValueError):
    """Sequence text could not be parsed."""

    exit_code = 2

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(SeqcError, ValueError):
    """An operation was called outside its domain."""

    exit_code = 3


class ReferenceMismatch(SeqcError):
    """Computed values disagree with the published reference tables."""

    exit_code = 4

    def __init__(self, message: str, offending: list | None = None):
        super().__init__(message)
        self.offending = offending or []


class PropertyFailure(SeqcError):
    """A property suite found a failing assertion."""

    exit_code = 5

    def __init__(self, message: str, failures: list[str] | None = None):
        super().__init__(message)
        self.failures = failures or []
