"""Exception hierarchy shared by all emowheel modules.

Every error raised by the library derives from :class:`EmowheelError`, so
callers (notably the CLI) can map failures to stable exit codes without
string matching.
"""

from __future__ import annotations

__all__ = [
    "EmowheelError",
    "ScoreParseError",
    "UnknownKeyError",
    "MixedKindsError",
    "WrongArityError",
    "OutOfRangeError",
    "TripleOverflowError",
    "InvalidScoreValueError",
    "EmptyCorpusError",
    "HeterogeneousKindsError",
    "NonPositiveRatioError",
    "InvalidOptionCombinationError",
    "GridOverflowError",
    "TitleMismatchError",
    "InputFileError",
    "JsonFormatError",
    "CorpusFormatError",
    "UnknownGroupFieldError",
]


class EmowheelError(Exception):
    """Base class for all emowheel errors."""


class ScoreParseError(EmowheelError, ValueError):
    """A raw score mapping could not be turned into a valid ScoreSet."""


class UnknownKeyError(ScoreParseError):
    """A key matches no basic emotion and no dyad name."""


class MixedKindsError(ScoreParseError):
    """Keys (or value forms) span more than one wheel kind."""


class WrongArityError(ScoreParseError):
    """The key set is incomplete or oversized for its wheel kind."""


class OutOfRangeError(ScoreParseError):
    """A numeric score lies outside [0, 1]."""


class TripleOverflowError(ScoreParseError):
    """The three intensity scores of one emotion sum to more than 1."""


class InvalidScoreValueError(ScoreParseError):
    """A value is not a score: non-numeric, wrong-length sequence,
    or a 3-element array supplied for a dyad key (dyads take scalars only)."""


class EmptyCorpusError(EmowheelError, ValueError):
    """Aggregation was asked for zero score sets."""


class HeterogeneousKindsError(EmowheelError, ValueError):
    """Score sets of different kinds were mixed in one aggregation."""


class NonPositiveRatioError(EmowheelError, ValueError):
    """A petal aspect ratio must be > 0."""


class InvalidOptionCombinationError(EmowheelError, ValueError):
    """Render options are incompatible with the ScoreSet kind."""


class GridOverflowError(EmowheelError, ValueError):
    """More wheels than grid cells."""


class TitleMismatchError(EmowheelError, ValueError):
    """Cell title count differs from wheel count."""


class InputFileError(EmowheelError, OSError):
    """An input file could not be read (or an output file written)."""


class JsonFormatError(EmowheelError, ValueError):
    """An input file is not the expected JSON shape."""


class CorpusFormatError(EmowheelError, ValueError):
    """A corpus record is malformed (bad metadata, bad record type)."""


class UnknownGroupFieldError(EmowheelError, KeyError):
    """A record lacks the requested grouping field."""
