"""Exception types shared across the package.

Every error raised by sarcgen on bad input or a violated contract derives
from :class:`SarcgenError`, so callers can catch one base type. I/O
failures keep the builtin ``OSError`` family.
"""


class SarcgenError(Exception):
    """Base class for all sarcgen errors."""


class EmptyTextError(SarcgenError):
    """Text became empty after normalization, or an empty utterance was passed."""


class EmptyCorpusError(SarcgenError):
    """A corpus file or pair set contained no usable records."""


class DegenerateCorpusError(SarcgenError):
    """Training data cannot support training (single class, empty vocabulary)."""


class InvalidAttentionError(SarcgenError):
    """Attention weights violate their contract (e.g. all zero)."""


class ShapeError(SarcgenError):
    """Paired sequences have mismatched lengths or invalid shapes."""


class NotFittedError(SarcgenError):
    """A model method was called before ``fit`` (or loading a checkpoint)."""


class BackendError(SarcgenError):
    """A model backend failed, timed out, or returned an unusable reply."""


class ContractError(SarcgenError):
    """A backend reply or argument violates a structural contract."""


class NoInferenceError(SarcgenError):
    """The commonsense backend produced no effect phrase."""


class NoKeywordError(SarcgenError):
    """Every token of an inferred phrase was stop-listed."""


class NoContextError(SarcgenError):
    """No context candidate could be retrieved, generated, or selected."""


class ValidationError(SarcgenError):
    """A data file row failed validation.

    ``row`` is the 1-based row number within the file, when known.
    """

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class MissingDataError(SarcgenError):
    """Not enough matching records to compute the requested statistic."""


class DegenerateGridError(SarcgenError):
    """A ratings grid has zero total variance, so ICC is undefined."""


class AUCUndefinedError(SarcgenError):
    """ROC AUC is undefined because the true labels contain a single class.

    The threshold metrics that are still well defined are attached as
    ``metrics`` so callers can recover them.
    """

    def __init__(self, message, metrics=None):
        super().__init__(message)
        self.metrics = metrics


class RangeError(SarcgenError):
    """A requested sample size or index is out of range."""
