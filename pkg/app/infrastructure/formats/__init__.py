from .eaf import parse_eaf, serialize_eaf
from .wav import (
    WavInfo,
    read_wav,
    read_wav_file,
    read_wav_info,
    write_wav,
    write_wav_file,
)

__all__ = [
    "parse_eaf",
    "serialize_eaf",
    "WavInfo",
    "read_wav",
    "read_wav_file",
    "read_wav_info",
    "write_wav",
    "write_wav_file",
]
