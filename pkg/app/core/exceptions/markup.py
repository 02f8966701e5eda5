from typing import Optional

from .base import CorpusToolError


class ParseError(CorpusToolError):
    """Исключение - EAF документ не может быть разобран."""

    def __init__(
        self,
        message: str,
        offset: Optional[int] = None,
        annotation_id: Optional[str] = None,
    ):
        """Инициализация исключения ParseError.

        :param message: Описание ошибки.
        :param offset: Смещение в байтах, если ошибка синтаксическая.
        :param annotation_id: Идентификатор аннотации, если ошибка
            относится к конкретной аннотации.
        """
        self.offset = offset
        self.annotation_id = annotation_id
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if annotation_id is not None:
            message = f"{message} (annotation {annotation_id})"
        super().__init__(message)


class SerializeError(CorpusToolError):
    """Исключение - документ нарушает инварианты модели разметки."""
