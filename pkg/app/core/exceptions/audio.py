from typing import Optional

from core import settings

from .base import CorpusToolError


class AudioFormatError(CorpusToolError):
    """Исключение - неподдерживаемый или поврежденный WAV файл."""

    def __init__(self, chunk: str, reason: str):
        """Инициализация исключения AudioFormatError.

        :param chunk: Имя блока RIFF, в котором найдена ошибка.
        :param reason: Описание ошибки.
        """
        self.chunk = chunk
        super().__init__(f"WAV chunk {chunk!r}: {reason}")


class RangeError(CorpusToolError):
    """Исключение - интервал выходит за границы буфера."""

    def __init__(self, message: str = settings.AUDIO.RANGE_MSG):
        """Инициализация исключения RangeError.

        :param message: Сообщение об ошибке. По умолчанию используется
            значение из настроек `settings.AUDIO.RANGE_MSG`.
        """
        super().__init__(message)


class ChannelError(CorpusToolError):
    """Исключение - операция с каналом недоступна для буфера."""

    def __init__(self, message: str = settings.AUDIO.CHANNEL_MSG):
        """Инициализация исключения ChannelError.

        :param message: Сообщение об ошибке.
        """
        super().__init__(message)


class ConcatError(CorpusToolError):
    """Исключение - буферы несовместимы для склейки."""

    def __init__(self, message: str = settings.AUDIO.CONCAT_MSG):
        """Инициализация исключения ConcatError.

        :param message: Сообщение об ошибке.
        """
        super().__init__(message)


class FormatError(CorpusToolError):
    """Исключение - строка не соответствует формату mm:ss.ms."""

    def __init__(self, text: str, reason: Optional[str] = None):
        """Инициализация исключения FormatError.

        :param text: Исходная строка или значение.
        :param reason: Описание ошибки вместо стандартного.
        """
        self.text = text
        super().__init__(reason or f"Duration {text!r} does not match mm:ss.ms.")
