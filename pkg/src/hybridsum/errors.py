"""Exception types shared across the pipeline."""


class HybridsumError(Exception):
    """Base class for all package-specific errors."""


class SchemaError(HybridsumError):
    """Input file does not match the expected schema (e.g. missing column)."""


class DuplicateIdError(HybridsumError):
    """Two rows share the same id."""


class RowValidationError(HybridsumError):
    """A row failed validation; carries the 1-based row number."""

    def __init__(self, message: str, row: int):
        super().__init__(f"{message} (row {row})")
        self.row = row


class DegenerateInputError(HybridsumError):
    """Text is empty, or empty after cleaning, and cannot be summarized."""


class MissingReferenceError(HybridsumError):
    """No reference summary exists for a post id."""


class JoinError(HybridsumError):
    """Gold and predicted label sets do not cover the same post ids."""

    def __init__(self, message: str, ids: list[str]):
        super().__init__(f"{message}: {', '.join(sorted(ids))}")
        self.ids = sorted(ids)


class BackendError(HybridsumError):
    """Base class for abstractive backend failures."""

    retryable = False


class BackendTimeoutError(BackendError):
    """The backend did not answer within the configured timeout."""

    retryable = True


class BackendUnreachableError(BackendError):
    """The backend endpoint could not be connected to."""

    retryable = True


class BackendProtocolError(BackendError):
    """The backend answered with a non-2xx status or a malformed body."""


class BackendEmptyError(BackendError):
    """The backend answered with an empty summary."""


class PipelineError(HybridsumError):
    """Both summarization branches failed for a post."""


class StartupError(HybridsumError):
    """The pipeline or service could not start (bad config, unreadable input)."""
