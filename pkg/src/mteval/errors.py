"""Exception types shared across the toolkit.

Exit-code mapping used by the CLI: InputError -> 2, InsufficientDataError -> 3,
anything else unexpected -> 4.
"""


class MtevalError(Exception):
    """Base class for all toolkit errors."""


class InputError(MtevalError):
    """Missing, unreadable or malformed input (files, flags, resources)."""


class InsufficientDataError(MtevalError):
    """Not enough overlapping data points to compute the requested statistic."""

    def __init__(self, message: str, missing_ids: list[int] | None = None):
        super().__init__(message)
        self.missing_ids = missing_ids or []


class DuplicateJudgmentError(MtevalError):
    """A judgment with the same (segment_id, system, annotator) key already exists."""


class JudgmentValidationError(MtevalError):
    """A judgment violates the schema; `field` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message
