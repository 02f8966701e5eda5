from pathlib import Path
from typing import Optional

from core import settings

from .base import CorpusToolError


class IdError(CorpusToolError):
    """Исключение - строка не является идентификатором разговора."""

    def __init__(self, text: str, rule: str):
        """Инициализация исключения IdError.

        :param text: Исходная строка.
        :param rule: Нарушенное правило.
        """
        self.text = text
        self.rule = rule
        super().__init__(f"Invalid conversation ID {text!r}: {rule}.")


class NoTranslationError(CorpusToolError):
    """Исключение - у разговора нет перевода."""

    def __init__(self, message: str = settings.CORPUS.NO_TRANSLATION_MSG):
        """Инициализация исключения NoTranslationError.

        :param message: Сообщение об ошибке. По умолчанию используется
            значение из настроек `settings.CORPUS.NO_TRANSLATION_MSG`.
        """
        super().__init__(message)


class AmbiguousTranslationError(CorpusToolError):
    """Исключение - у разговора несколько кандидатов на перевод."""

    def __init__(self, message: str = settings.CORPUS.AMBIGUOUS_TRANSLATION_MSG):
        """Инициализация исключения AmbiguousTranslationError.

        :param message: Сообщение об ошибке. По умолчанию используется
            значение из настроек `settings.CORPUS.AMBIGUOUS_TRANSLATION_MSG`.
        """
        super().__init__(message)


class MetadataError(CorpusToolError):
    """Исключение - ошибка в таблице метаданных."""

    def __init__(
        self,
        file: str,
        reason: str,
        line: Optional[int] = None,
        column: Optional[str] = None,
    ):
        """Инициализация исключения MetadataError.

        :param file: Имя файла таблицы.
        :param reason: Описание ошибки.
        :param line: Номер строки файла (с единицы), если известен.
        :param column: Имя столбца, если известно.
        """
        self.file = file
        self.reason = reason
        self.line = line
        self.column = column
        location = file
        if line is not None:
            location += f":{line}"
        if column is not None:
            location += f" [{column}]"
        super().__init__(f"{location}: {reason}")


class CorpusIoError(CorpusToolError):
    """Исключение - директория корпуса недоступна для чтения."""

    def __init__(
        self,
        path: Path,
        message: str = settings.CORPUS.UNREADABLE_DIR_MSG,
    ):
        """Инициализация исключения CorpusIoError.

        :param path: Путь к директории.
        :param message: Сообщение об ошибке.
        """
        self.path = path
        super().__init__(f"{message} ({path})")
