"""Exception hierarchy, mapped onto CLI exit codes (see cli module)."""


class SensekitError(Exception):
    """Base class for all package errors."""


class ConfigError(SensekitError):
    """Invalid configuration. Carries the full list of violations."""

    def __init__(self, messages):
        if isinstance(messages, str):
            messages = [messages]
        self.messages = list(messages)
        super().__init__("; ".join(self.messages))


class DataError(SensekitError):
    """Problem with input data (files, records, lookups)."""


class CorpusFormatError(DataError):
    """Malformed corpus file."""


class AnnotationError(DataError):
    """Malformed or dangling sense annotation."""


class EmbeddingFormatError(DataError):
    """Malformed embedding file."""


class UnknownWordError(DataError):
    """Word not present in the embedding vocabulary."""
