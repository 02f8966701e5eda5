__all__ = (
    "TimeRange",
    "WavBuffer",
)

from .buffers import TimeRange, WavBuffer
