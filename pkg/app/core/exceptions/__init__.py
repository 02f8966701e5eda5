__all__ = (
    "CorpusToolError",
    "ParseError",
    "SerializeError",
    "IdError",
    "NoTranslationError",
    "AmbiguousTranslationError",
    "MetadataError",
    "CorpusIoError",
    "AudioFormatError",
    "RangeError",
    "ChannelError",
    "ConcatError",
    "FormatError",
    "ReleaseError",
    "StrictModeError",
    "StatsError",
)

from .audio import (
    AudioFormatError,
    ChannelError,
    ConcatError,
    FormatError,
    RangeError,
)
from .base import CorpusToolError
from .corpus import (
    AmbiguousTranslationError,
    CorpusIoError,
    IdError,
    MetadataError,
    NoTranslationError,
)
from .markup import ParseError, SerializeError
from .release import ReleaseError, StatsError, StrictModeError
