import struct
from pathlib import Path
from typing import NamedTuple, Optional

import numpy as np

from core import settings
from core.exceptions import AudioFormatError
from infrastructure.schemas.audio import WavBuffer

WAVE_FORMAT_PCM = 0x0001
WAVE_FORMAT_EXTENSIBLE = 0xFFFE
PCM_SUBFORMAT_TAIL = b"\x00\x00\x00\x00\x10\x00\x80\x00\x00\xaa\x00\x38\x9b\x71"
FMT_STRUCT = struct.Struct("<HHIIHH")
CHUNK_HEADER = struct.Struct("<4sI")
SAMPLE_DTYPE = np.dtype("<i2")


class WavFormat(NamedTuple):
    """Параметры блока `fmt `."""

    sample_rate: int
    channels: int
    block_align: int


class WavInfo(NamedTuple):
    """Сведения о WAV файле без чтения отсчетов."""

    sample_rate: int
    channels: int
    frames: int


def _read_fmt(body: bytes) -> WavFormat:
    """Разбирает блок `fmt ` и проверяет поддержку формата.

    :param body: Содержимое блока.
    :raises AudioFormatError: Формат не PCM, не 16 бит или не 1-2 канала.
    :return: WavFormat
    """
    if len(body) < FMT_STRUCT.size:
        raise AudioFormatError("fmt ", "chunk is shorter than 16 bytes")
    format_tag, channels, sample_rate, _, block_align, bits = FMT_STRUCT.unpack_from(
        body
    )
    if format_tag == WAVE_FORMAT_EXTENSIBLE and len(body) >= 40:
        # The sub-format GUID starts at byte 24; its first two bytes are the tag.
        format_tag = struct.unpack_from("<H", body, 24)[0]
        if body[26:40] != PCM_SUBFORMAT_TAIL:
            format_tag = WAVE_FORMAT_EXTENSIBLE
    if format_tag != WAVE_FORMAT_PCM:
        raise AudioFormatError("fmt ", f"format tag {format_tag:#06x} is not PCM")
    if bits != settings.AUDIO.BITS_PER_SAMPLE:
        raise AudioFormatError("fmt ", f"{bits}-bit samples are not supported")
    if channels not in (1, 2):
        raise AudioFormatError("fmt ", f"{channels} channels are not supported")
    if sample_rate <= 0:
        raise AudioFormatError("fmt ", "sample rate must be positive")
    if block_align != channels * bits // 8:
        raise AudioFormatError("fmt ", f"block align {block_align} is inconsistent")
    return WavFormat(sample_rate, channels, block_align)


def _scan(data: bytes) -> tuple[WavFormat, int, int]:
    """Проходит по блокам RIFF и находит `fmt ` и `data`.

    :param data: Содержимое WAV файла.
    :raises AudioFormatError: Заголовок не RIFF/WAVE, блок обрезан или
        отсутствует `fmt `/`data`.
    :return: Формат, смещение и размер блока `data`.
    """
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise AudioFormatError("RIFF", "not a RIFF/WAVE file")
    fmt: Optional[WavFormat] = None
    position = 12
    while position + CHUNK_HEADER.size <= len(data):
        raw_id, size = CHUNK_HEADER.unpack_from(data, position)
        chunk_id = raw_id.decode("latin-1")
        body_start = position + CHUNK_HEADER.size
        if body_start + size > len(data):
            raise AudioFormatError(chunk_id, "chunk is truncated")
        if chunk_id == "fmt ":
            fmt = _read_fmt(data[body_start : body_start + size])
        elif chunk_id == "data":
            if fmt is None:
                raise AudioFormatError("data", "no fmt chunk before data")
            if size % fmt.block_align:
                raise AudioFormatError("data", "chunk ends inside a sample frame")
            return fmt, body_start, size
        position = body_start + size + (size & 1)
    if position < len(data):
        raise AudioFormatError("RIFF", "chunk header is truncated")
    raise AudioFormatError("fmt " if fmt is None else "data", "chunk is missing")


def read_wav(data: bytes) -> WavBuffer:
    """Читает WAV файл PCM 16 бит в буфер без потерь.

    :param data: Содержимое WAV файла.
    :raises AudioFormatError: Формат не поддерживается или файл поврежден.
    :return: WavBuffer
    """
    fmt, offset, size = _scan(data)
    samples = np.frombuffer(data, dtype=SAMPLE_DTYPE, count=size // 2, offset=offset)
    return WavBuffer(
        sample_rate=fmt.sample_rate,
        channels=fmt.channels,
        samples=samples.astype(np.int16),
    )


def read_wav_info(data: bytes) -> WavInfo:
    """Читает параметры WAV файла без разбора отсчетов.

    :param data: Содержимое WAV файла.
    :return: WavInfo
    """
    fmt, _, size = _scan(data)
    return WavInfo(fmt.sample_rate, fmt.channels, size // fmt.block_align)


def write_wav(buf: WavBuffer) -> bytes:
    """Записывает буфер в WAV: блоки `fmt ` и `data` без дополнительных.

    :param buf: Аудио буфер.
    :return: Содержимое WAV файла.
    """
    payload = buf.interleaved.astype(SAMPLE_DTYPE).tobytes()
    block_align = buf.channels * 2
    fmt_body = FMT_STRUCT.pack(
        WAVE_FORMAT_PCM,
        buf.channels,
        buf.sample_rate,
        buf.sample_rate * block_align,
        block_align,
        settings.AUDIO.BITS_PER_SAMPLE,
    )
    riff_size = 4 + CHUNK_HEADER.size + len(fmt_body) + CHUNK_HEADER.size
    riff_size += len(payload)
    return b"".join(
        (
            CHUNK_HEADER.pack(b"RIFF", riff_size),
            b"WAVE",
            CHUNK_HEADER.pack(b"fmt ", len(fmt_body)),
            fmt_body,
            CHUNK_HEADER.pack(b"data", len(payload)),
            payload,
        )
    )


def read_wav_file(path: Path) -> WavBuffer:
    """Читает WAV файл с диска."""
    return read_wav(path.read_bytes())


def write_wav_file(path: Path, buf: WavBuffer) -> None:
    """Записывает буфер в WAV файл, создавая родительские директории."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(write_wav(buf))
