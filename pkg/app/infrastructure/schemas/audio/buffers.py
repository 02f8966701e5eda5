from typing import Any

import numpy as np
from pydantic import Field, model_validator

from ..abc import ABCSchema


class WavBuffer(ABCSchema):
    """PCM аудио 16 бит: частота, число каналов и отсчеты.

    Отсчеты хранятся в неизменяемом массиве int16 формы
    (кадры, каналы); порядок C этого массива совпадает с
    чередованием каналов в WAV файле.
    """

    sample_rate: int = Field(..., gt=0)
    channels: int = Field(..., ge=1, le=2)
    samples: np.ndarray

    @model_validator(mode="before")
    @classmethod
    def shape_samples(cls, data: Any) -> Any:
        """Приводит отсчеты к неизменяемому массиву (кадры, каналы).

        Плоский массив трактуется как чередующиеся отсчеты каналов.

        :param data: Исходные данные модели.
        :raises ValueError: Число отсчетов не делится на число каналов.
        :return: Данные с приведенным массивом отсчетов.
        """
        if not isinstance(data, dict) or "samples" not in data:
            return data
        channels = data.get("channels")
        samples = np.array(data["samples"], dtype=np.int16)
        if samples.ndim == 1:
            if not isinstance(channels, int) or channels < 1:
                raise ValueError("Channel count is required for flat samples.")
            if samples.size % channels:
                raise ValueError("Sample count is not divisible by channels.")
            samples = samples.reshape(-1, channels)
        samples.setflags(write=False)
        return {**data, "samples": samples}

    @model_validator(mode="after")
    def check_shape(self) -> "WavBuffer":
        """Проверяет соответствие формы массива числу каналов."""
        if self.samples.ndim != 2 or self.samples.shape[1] != self.channels:
            raise ValueError("Samples must be shaped (frames, channels).")
        return self

    @property
    def frames(self) -> int:
        """Число кадров (отсчетов на канал)."""
        return int(self.samples.shape[0])

    @property
    def duration_ms(self) -> int:
        """Длительность в целых миллисекундах, с округлением вниз."""
        return self.frames * 1000 // self.sample_rate

    @property
    def interleaved(self) -> np.ndarray:
        """Плоский массив чередующихся отсчетов."""
        return self.samples.reshape(-1)

    def __eq__(self, other: object) -> bool:
        """Побитовое сравнение буферов."""
        if not isinstance(other, WavBuffer):
            return NotImplemented
        return (
            self.sample_rate == other.sample_rate
            and self.channels == other.channels
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None  # type: ignore[assignment]


class TimeRange(ABCSchema):
    """Интервал времени в целых миллисекундах."""

    start_ms: int = Field(..., ge=0)
    end_ms: int

    @model_validator(mode="after")
    def check_range(self) -> "TimeRange":
        """Проверяет, что начало интервала раньше конца."""
        if self.start_ms >= self.end_ms:
            raise ValueError("Range start must be before its end.")
        return self
