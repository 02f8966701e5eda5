from pathlib import Path
from typing import Iterable, List, NamedTuple, Sequence

from core import settings
from core.exceptions import MetadataError
from infrastructure.repositories.tables import (
    ConversationRepository,
    ParticipantRepository,
    ProducerRepository,
)
from infrastructure.schemas.corpus import ConversationRecord, Participant, Producer
from services.loggs import logg_error_data, logger


class Metadata(NamedTuple):
    """Три таблицы метаданных корпуса."""

    participants: List[Participant]
    producers: List[Producer]
    conversations: List[ConversationRecord]


def _check_unique(file: str, ids: Sequence[object]) -> None:
    """Проверяет уникальность id в таблице.

    :param file: Имя файла таблицы.
    :param ids: Значения id в порядке строк.
    :raises MetadataError: Найден повтор; строка указывает на повтор.
    """
    seen = set()
    for index, item in enumerate(ids):
        key = item.upper() if isinstance(item, str) else item
        if key in seen:
            raise MetadataError(
                file, f"duplicate id {item}", line=index + 2, column="id"
            )
        seen.add(key)


def _check_references(
    participants: List[Participant],
    producers: List[Producer],
    conversations: List[ConversationRecord],
) -> None:
    """Проверяет, что ссылки из таблицы разговоров разрешаются.

    :raises MetadataError: Разговор ссылается на несуществующего участника
        или оператора.
    """
    participant_ids = {participant.id for participant in participants}
    producer_ids = {producer.id for producer in producers}
    file = settings.CORPUS.CONVERSATION_FILE
    for index, record in enumerate(conversations):
        line = index + 2
        for column in ("participant_id_left", "participant_id_right"):
            value = getattr(record, column)
            if value not in participant_ids:
                raise MetadataError(
                    file, f"unknown participant {value}", line=line, column=column
                )
        if record.producer_id not in producer_ids:
            raise MetadataError(
                file,
                f"unknown producer {record.producer_id}",
                line=line,
                column="producer_id",
            )


def load_metadata(directory: Path) -> Metadata:
    """Читает таблицы участников, операторов и разговоров.

    :param directory: Директория с `participant.csv`, `producer.csv` и
        `conversation.csv`.
    :raises MetadataError: Файл отсутствует, заголовок неверный, строка не
        разбирается, id повторяется или ссылка не разрешается.
    :return: Metadata
    """
    try:
        participants = ParticipantRepository(directory).load()
        producers = ProducerRepository(directory).load()
        conversations = ConversationRepository(directory).load()
        _check_unique(
            settings.CORPUS.PARTICIPANT_FILE, [item.id for item in participants]
        )
        _check_unique(settings.CORPUS.PRODUCER_FILE, [item.id for item in producers])
        _check_unique(
            settings.CORPUS.CONVERSATION_FILE, [item.id for item in conversations]
        )
        _check_references(participants, producers, conversations)
    except MetadataError as e:
        logger.error(msg="Ошибка чтения метаданных.", extra=logg_error_data(e))
        raise e

    logger.info(
        "Метаданные загружены: участников %s, операторов %s, разговоров %s",
        len(participants),
        len(producers),
        len(conversations),
    )
    return Metadata(participants, producers, conversations)


def write_metadata(
    directory: Path,
    participants: Iterable[Participant],
    producers: Iterable[Producer],
    conversations: Iterable[ConversationRecord],
) -> None:
    """Записывает таблицы метаданных в канонической форме.

    Строки сортируются по id, поэтому запись канонических таблиц,
    прочитанных `load_metadata`, воспроизводит их побайтно.

    :param directory: Директория назначения.
    :param participants: Участники.
    :param producers: Операторы.
    :param conversations: Разговоры.
    """
    ParticipantRepository(directory).dump(sorted(participants, key=lambda p: p.id))
    ProducerRepository(directory).dump(sorted(producers, key=lambda p: p.id))
    ConversationRepository(directory).dump(sorted(conversations, key=lambda c: c.id))
    logger.debug("Метаданные записаны в %s", directory)
