from pathlib import Path
from typing import Dict, Optional

from pydantic import field_validator

from ...enums import AudioLayoutEnum
from ..abc import ABCSchema
from .metadata import ConversationRecord, Participant, Producer


class ConversationFiles(ABCSchema):
    """Найденные на диске файлы разговора.

    frames и sample_rate - длина записи по заголовкам WAV; None, если
    аудио нет или заголовок не читается.
    """

    conversation: str
    markup_path: Optional[Path] = None
    layout: Optional[AudioLayoutEnum] = None
    audio_path: Optional[Path] = None
    left_track_path: Optional[Path] = None
    right_track_path: Optional[Path] = None
    frames: Optional[int] = None
    sample_rate: Optional[int] = None

    @property
    def has_markup(self) -> bool:
        """True - файл разметки найден."""
        return self.markup_path is not None

    @property
    def has_audio(self) -> bool:
        """True - найдена стерео запись или обе дорожки участников."""
        return self.layout is not None


class Corpus(ABCSchema):
    """Метаданные корпуса вместе с найденными файлами разговоров."""

    participants: tuple[Participant, ...] = ()
    producers: tuple[Producer, ...] = ()
    conversations: tuple[ConversationRecord, ...] = ()
    recordings_dir: Path
    files: Dict[str, ConversationFiles] = {}

    @field_validator("conversations")
    @classmethod
    def check_unique_ids(
        cls,
        conversations: tuple[ConversationRecord, ...],
    ) -> tuple[ConversationRecord, ...]:
        """Проверяет уникальность идентификаторов разговоров."""
        ids = [record.id.upper() for record in conversations]
        if len(ids) != len(set(ids)):
            raise ValueError("Conversation ids must be unique.")
        return conversations

    def files_for(self, record: ConversationRecord) -> ConversationFiles:
        """Возвращает файлы разговора, пустые если разговор не найден.

        :param record: Строка таблицы разговоров.
        :return: ConversationFiles
        """
        return self.files.get(record.id, ConversationFiles(conversation=record.id))

    def conversation(self, conversation_id: str) -> Optional[ConversationRecord]:
        """Возвращает разговор по идентификатору без учета регистра.

        :param conversation_id: Идентификатор разговора.
        :return: Строка таблицы или None.
        """
        wanted = conversation_id.upper()
        for record in self.conversations:
            if record.id.upper() == wanted:
                return record
        return None
