"""Exception hierarchy shared across the toolkit.

``InputError`` covers everything caused by bad files, bad references or
bad arguments; the CLI maps it to a distinct exit code so callers can
tell input problems from genuine bugs.
"""


class ParavarError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ParavarError):
    """Malformed or inconsistent input data (files, manifests, arguments)."""


class ConlluError(InputError):
    """Malformed CoNLL-U content; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ManifestError(InputError):
    """Malformed pair manifest row."""


class MissingSentenceError(InputError):
    """Manifest references a sentence ID absent from the CoNLL-U file."""


class DuplicatePairError(InputError):
    """Manifest contains the same pair ID twice."""


class AlignmentError(InputError):
    """Parallel corpus files disagree on line count."""


class SampleSizeError(InputError):
    """Requested sample exceeds the eligible population."""

    def __init__(self, requested: int, eligible: int):
        super().__init__(
            f"requested sample of {requested} but only {eligible} eligible pairs"
        )
        self.requested = requested
        self.eligible = eligible
