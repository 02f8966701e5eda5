from typing import Sequence

import numpy as np

from core.exceptions import ChannelError, ConcatError, RangeError
from infrastructure.enums import SideEnum
from infrastructure.schemas.audio import TimeRange, WavBuffer
from services.loggs import logger

from .timing import ms_to_sample

CHANNEL_INDEX = {SideEnum.LEFT: 0, SideEnum.RIGHT: 1}


def _frame_bounds(buf: WavBuffer, time_range: TimeRange) -> tuple[int, int]:
    """Переводит интервал в границы кадров и проверяет длительность.

    :raises RangeError: Конец интервала за концом буфера.
    """
    start = ms_to_sample(time_range.start_ms, buf.sample_rate)
    end = ms_to_sample(time_range.end_ms, buf.sample_rate)
    if end > buf.frames:
        raise RangeError(
            f"Range {time_range.start_ms}-{time_range.end_ms} ms exceeds "
            f"{buf.frames} frames at {buf.sample_rate} Hz."
        )
    return start, end


def _with_samples(buf: WavBuffer, samples: np.ndarray) -> WavBuffer:
    """Новый буфер с параметрами исходного и другими отсчетами."""
    return WavBuffer(
        sample_rate=buf.sample_rate, channels=samples.shape[1], samples=samples
    )


def cut(buf: WavBuffer, time_range: TimeRange) -> WavBuffer:
    """Вырезает интервал из буфера.

    Число кадров результата равно
    ms_to_sample(end) - ms_to_sample(start).

    :param buf: Исходный буфер.
    :param time_range: Интервал в миллисекундах.
    :raises RangeError: Интервал выходит за длительность буфера.
    :return: WavBuffer
    """
    start, end = _frame_bounds(buf, time_range)
    return _with_samples(buf, buf.samples[start:end])


def extract_channel(buf: WavBuffer, side: SideEnum) -> WavBuffer:
    """Возвращает моно буфер левого или правого канала.

    :param buf: Стерео буфер.
    :param side: LEFT или RIGHT.
    :raises ChannelError: Буфер не стерео или канал MIXED.
    :return: WavBuffer
    """
    if buf.channels != 2:
        raise ChannelError()
    if side not in CHANNEL_INDEX:
        raise ChannelError(f"Cannot extract the {side.value} channel.")
    index = CHANNEL_INDEX[side]
    return _with_samples(buf, buf.samples[:, index : index + 1])


def concat(buffers: Sequence[WavBuffer]) -> WavBuffer:
    """Склеивает буферы по порядку.

    :param buffers: Непустой список буферов с одной частотой и числом
        каналов.
    :raises ConcatError: Список пуст или параметры буферов различаются.
    :return: WavBuffer
    """
    if not buffers:
        raise ConcatError("Nothing to concatenate.")
    first = buffers[0]
    for buf in buffers[1:]:
        if (buf.sample_rate, buf.channels) != (first.sample_rate, first.channels):
            raise ConcatError()
    return _with_samples(first, np.concatenate([buf.samples for buf in buffers]))


def silence(buf: WavBuffer, time_range: TimeRange) -> WavBuffer:
    """Обнуляет отсчеты интервала во всех каналах.

    :param buf: Исходный буфер.
    :param time_range: Интервал в миллисекундах.
    :raises RangeError: Интервал выходит за длительность буфера.
    :return: WavBuffer
    """
    start, end = _frame_bounds(buf, time_range)
    samples = buf.samples.copy()
    samples[start:end] = 0
    return _with_samples(buf, samples)


def pad_to(buf: WavBuffer, frames: int) -> WavBuffer:
    """Дополняет буфер нулями в конце до заданного числа кадров.

    :param buf: Исходный буфер.
    :param frames: Итоговое число кадров.
    :raises RangeError: Буфер длиннее заданного числа кадров.
    :return: WavBuffer
    """
    if frames < buf.frames:
        raise RangeError(f"Cannot pad {buf.frames} frames to {frames}.")
    return _with_samples(buf, np.pad(buf.samples, ((0, frames - buf.frames), (0, 0))))


def merge_tracks(left: WavBuffer, right: WavBuffer) -> WavBuffer:
    """Собирает стерео буфер из дорожек двух участников.

    Более короткая дорожка дополняется нулями с предупреждением.

    :param left: Моно дорожка левого участника.
    :param right: Моно дорожка правого участника.
    :raises ChannelError: Дорожка не моно.
    :raises ConcatError: Частоты дорожек различаются.
    :return: Стерео WavBuffer
    """
    if left.channels != 1 or right.channels != 1:
        raise ChannelError("Participant tracks must be mono.")
    if left.sample_rate != right.sample_rate:
        raise ConcatError("Participant tracks differ in sample rate.")
    frames = max(left.frames, right.frames)
    if left.frames != right.frames:
        logger.warning(
            "Дорожки участников разной длины: %s и %s кадров, дополнение до %s",
            left.frames,
            right.frames,
            frames,
        )
    samples = np.hstack([pad_to(left, frames).samples, pad_to(right, frames).samples])
    return _with_samples(left, samples)


def silence_from(buf: WavBuffer, start_ms: int) -> WavBuffer:
    """Обнуляет отсчеты от момента start_ms до последнего кадра.

    Последние кадры записи, не составляющие целой миллисекунды, тоже
    обнуляются.

    :param buf: Исходный буфер.
    :param start_ms: Начало интервала в миллисекундах.
    :return: WavBuffer
    """
    start = ms_to_sample(start_ms, buf.sample_rate)
    samples = buf.samples.copy()
    samples[start:] = 0
    return _with_samples(buf, samples)
