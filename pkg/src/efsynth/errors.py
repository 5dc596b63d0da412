"""Exception hierarchy shared by every module of the package."""


class EFSynthError(Exception):
    """Base class for all errors raised by efsynth."""


class InvalidAlphaError(EFSynthError, ValueError):
    """An infix pattern whose length is not of the form 2**q - 1."""


class UndefinedSimilarityError(EFSynthError, ValueError):
    """EF-similarity was requested for two identical strings."""


class InconsistentSampleError(EFSynthError, ValueError):
    """A string is labelled both positive and negative."""


class EmptySetError(EFSynthError, ValueError):
    """A selection was attempted from an empty distinguishability set."""


class CapacityError(EFSynthError, RuntimeError):
    """A resource guard of an exponential procedure was exceeded."""


class UnboundVariableError(EFSynthError, KeyError):
    """A free variable had no value in the evaluation environment."""


class FormulaParseError(EFSynthError, ValueError):
    """Malformed formula serialization.

    ``position`` is a character offset for syntax errors and a JSON path
    (e.g. ``$.args[1].n``) for structural ones.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class SampleParseError(EFSynthError, ValueError):
    """Malformed sample file; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
