from typing import Any, Dict

from core import settings
from core.exceptions import MetadataError
from infrastructure.schemas.corpus import ConversationRecord, Participant, Producer

from .abc import ABCTableRepository

PRODUCER_MARK = "*"


class ParticipantRepository(ABCTableRepository[Participant]):
    """Таблица участников `participant.csv`.

    Столбец is_producer хранит звездочку для True и пустую строку для False.
    """

    schema = Participant
    file_name = settings.CORPUS.PARTICIPANT_FILE
    header = (
        "id",
        "lang1",
        "lang2",
        "lang_strength",
        "dialect_note1",
        "dialect_note2",
        "is_producer",
        "notes",
    )

    def prepare_row(self, row: Dict[str, str]) -> Dict[str, Any]:
        """Переводит отметку оператора в булево значение.

        :raises MetadataError: В столбце is_producer не звездочка и не пусто.
        """
        mark = row["is_producer"].strip()
        if mark not in ("", PRODUCER_MARK):
            raise MetadataError(
                self.file_name,
                f"must be {PRODUCER_MARK!r} or empty, got {mark!r}",
                column="is_producer",
            )
        return {**row, "is_producer": mark == PRODUCER_MARK}

    def create_row_from_schema(self, schema: Participant) -> Dict[str, str]:
        """Создает строку таблицы, кодируя is_producer звездочкой."""
        row = super().create_row_from_schema(schema)
        row["lang1"] = str(schema.lang1)
        row["lang2"] = str(schema.lang2)
        row["is_producer"] = PRODUCER_MARK if schema.is_producer else ""
        return row


class ProducerRepository(ABCTableRepository[Producer]):
    """Таблица операторов записи `producer.csv`."""

    schema = Producer
    file_name = settings.CORPUS.PRODUCER_FILE
    header = ("id", "name")


class ConversationRepository(ABCTableRepository[ConversationRecord]):
    """Таблица разговоров `conversation.csv`.

    Пустой trans_id означает, что перевод еще не найден.
    """

    schema = ConversationRecord
    file_name = settings.CORPUS.CONVERSATION_FILE
    header = (
        "id",
        "date",
        "original_or_reenacted",
        "participant_id_left",
        "participant_id_right",
        "producer_id",
        "trans_id",
    )

    def prepare_row(self, row: Dict[str, str]) -> Dict[str, Any]:
        """Переводит пустой trans_id в None."""
        return {**row, "trans_id": row["trans_id"].strip() or None}

    def create_row_from_schema(self, schema: ConversationRecord) -> Dict[str, str]:
        """Создает строку таблицы, записывая отсутствующий trans_id пустым."""
        row = super().create_row_from_schema(schema)
        row["trans_id"] = schema.trans_id or ""
        return row
