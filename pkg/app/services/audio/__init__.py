__all__ = (
    "concat",
    "cut",
    "extract_channel",
    "format_duration",
    "load_conversation_audio",
    "merge_tracks",
    "ms_to_sample",
    "pad_to",
    "parse_duration",
    "silence",
    "silence_from",
)

from .editing import (
    concat,
    cut,
    extract_channel,
    merge_tracks,
    pad_to,
    silence,
    silence_from,
)
from .loading import load_conversation_audio
from .timing import format_duration, ms_to_sample, parse_duration
