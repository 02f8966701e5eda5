import re
from typing import List, Optional

from core.exceptions import AmbiguousTranslationError, IdError, NoTranslationError
from infrastructure.enums import ISO_639_1_CODES, OgReEnum
from infrastructure.schemas.corpus import (
    ConversationId,
    ConversationRecord,
    Corpus,
    LanguageCode,
)

ID_SHAPE = re.compile(r"^([A-Za-z]+)_([0-9]+)$")
LOOSE_SHAPE = re.compile(r"^\s*([A-Za-z]*)[\s_-]*([0-9]+)\s*$")


def parse_conversation_id(text: str) -> ConversationId:
    """Разбирает идентификатор разговора вида `XX_ddd`.

    Буквы языка принимаются в любом регистре.

    :param text: Исходная строка.
    :raises IdError: Строка не соответствует форме, число цифр не три
        или код языка не назначен в ISO 639-1.
    :return: ConversationId
    """
    match = ID_SHAPE.match(text)
    if match is None:
        raise IdError(text, "expected <language code>_<three digits>")
    letters, digits = match.groups()
    if len(letters) != 2:
        raise IdError(text, "language code must have exactly two letters")
    if len(digits) != 3:
        raise IdError(text, "conversation number must have exactly three digits")
    if letters.lower() not in ISO_639_1_CODES:
        raise IdError(text, f"language code {letters!r} is not assigned in ISO 639-1")
    return ConversationId(lang=LanguageCode(code=letters), number=int(digits))


def try_parse_conversation_id(text: str) -> Optional[ConversationId]:
    """Разбирает идентификатор разговора, возвращая None при ошибке."""
    try:
        return parse_conversation_id(text)
    except IdError:
        return None


def parse_og_re(text: str) -> Optional[OgReEnum]:
    """Разбирает код OG/RE; допустимы только строки `OG` и `RE`."""
    for kind in OgReEnum:
        if kind.value == text:
            return kind
    return None


def loose_key(text: str) -> Optional[tuple[str, int]]:
    """Возвращает (буквы, номер) из идентификатора, даже неверного.

    Используется для поиска партнера разговора с испорченным
    идентификатором: партнеры имеют один номер и разные буквы.

    :param text: Исходный идентификатор.
    :return: Буквы в верхнем регистре и номер, None если номера нет.
    """
    match = LOOSE_SHAPE.match(text)
    if match is None:
        return None
    return match.group(1).upper(), int(match.group(2))


def canonical_id(record: ConversationRecord) -> str:
    """Каноническая запись идентификатора, исходная если он неверен."""
    conversation_id = try_parse_conversation_id(record.id)
    return record.id if conversation_id is None else conversation_id.canonical


def translation_candidates(
    conv: ConversationRecord,
    corpus: Corpus,
) -> List[ConversationRecord]:
    """Перебирает разговоры, подходящие на роль перевода.

    Кандидат имеет верный идентификатор с другим кодом языка, тот же
    номер и противоположный код OG/RE.

    :param conv: Разговор.
    :param corpus: Корпус.
    :return: Кандидаты в порядке таблицы разговоров.
    """
    conversation_id = try_parse_conversation_id(conv.id)
    og_re = parse_og_re(conv.original_or_reenacted)
    if conversation_id is None or og_re is None:
        return []

    candidates = []
    for other in corpus.conversations:
        other_id = try_parse_conversation_id(other.id)
        if other_id is None or other_id.number != conversation_id.number:
            continue
        if other_id.lang == conversation_id.lang:
            continue
        if parse_og_re(other.original_or_reenacted) is og_re.opposite:
            candidates.append(other)
    return candidates


def find_translation(conv: ConversationRecord, corpus: Corpus) -> ConversationRecord:
    """Находит единственный перевод разговора.

    Возвращаемая запись перевода получает trans_id, указывающий на
    исходный разговор.

    :param conv: Разговор из корпуса.
    :param corpus: Корпус.
    :raises NoTranslationError: Кандидатов нет.
    :raises AmbiguousTranslationError: Кандидатов больше одного.
    :return: Запись перевода.
    """
    candidates = translation_candidates(conv, corpus)
    if not candidates:
        raise NoTranslationError(f"{conv.id}: no translation found.")
    if len(candidates) > 1:
        names = ", ".join(candidate.id for candidate in candidates)
        raise AmbiguousTranslationError(f"{conv.id}: candidates {names}.")
    return candidates[0].model_copy(update={"trans_id": canonical_id(conv)})
