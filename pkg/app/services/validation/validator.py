from collections import Counter
from typing import Dict, Iterable, List, Optional, Set

from core.exceptions import AmbiguousTranslationError, NoTranslationError
from infrastructure.enums import DiagnosticCodeEnum
from infrastructure.schemas.corpus import ConversationFiles, ConversationRecord, Corpus
from infrastructure.schemas.markup import MarkupDocument, Tier
from infrastructure.schemas.validation import Diagnostic, FragmentKey, ValidationReport
from services.audio import ms_to_sample
from services.corpus import (
    canonical_id,
    find_translation,
    loose_key,
    parse_og_re,
    try_parse_conversation_id,
)
from services.loggs import logger

from .messages import make_diagnostic
from .rules import canonical_value, is_delete, parse_tier_name

Code = DiagnosticCodeEnum


def loose_partners(record: ConversationRecord, corpus: Corpus) -> List[str]:
    """Возвращает разговоры с тем же номером и другими буквами языка.

    Сравнение идет по неразобранным идентификаторам, поэтому партнер
    находится и у разговора с неверным идентификатором.

    :param record: Разговор.
    :param corpus: Корпус.
    :return: Идентификаторы партнеров в порядке таблицы.
    """
    key = loose_key(record.id)
    if key is None:
        return []
    partners = []
    for other in corpus.conversations:
        other_key = loose_key(other.id)
        if other is record or other_key is None:
            continue
        if other_key[1] == key[1] and other_key[0] != key[0]:
            partners.append(other.id)
    return partners


def _is_malformed(record: ConversationRecord) -> bool:
    """True - идентификатор или код OG/RE разговора неверны."""
    return (
        try_parse_conversation_id(record.id) is None
        or parse_og_re(record.original_or_reenacted) is None
    )


def _translation(record: ConversationRecord, corpus: Corpus) -> Optional[str]:
    """Возвращает id перевода, если перевод однозначен в обе стороны.

    Заполненный в таблице trans_id должен указывать на тот же перевод.
    """
    try:
        partner = find_translation(record, corpus)
        back = find_translation(partner, corpus)
    except (NoTranslationError, AmbiguousTranslationError) as e:
        logger.debug("Перевод %s не найден: %s", record.id, e.message)
        return None
    if back.id != record.id:
        return None
    if record.trans_id and record.trans_id.upper() != canonical_id(partner).upper():
        logger.debug("trans_id %s не совпадает с переводом %s", record.id, partner.id)
        return None
    return partner.id


def _check_conversation(
    record: ConversationRecord,
    corpus: Corpus,
    markups: Dict[str, MarkupDocument],
) -> List[Diagnostic]:
    """Проверки уровня разговора: файлы, идентификатор, код, перевод."""
    files = corpus.files_for(record)
    found: List[Diagnostic] = []
    if not files.has_markup or record.id not in markups:
        found.append(make_diagnostic(Code.MISSING_MARKUP, record.id))
    if not files.has_audio:
        found.append(make_diagnostic(Code.MISSING_AUDIO, record.id))
    if try_parse_conversation_id(record.id) is None:
        found.append(make_diagnostic(Code.BAD_CONVERSATION_ID, record.id))
    if parse_og_re(record.original_or_reenacted) is None:
        found.append(make_diagnostic(Code.BAD_OG_RE_CODE, record.id))
    if _is_malformed(record):
        return found

    partners = [corpus.conversation(item) for item in loose_partners(record, corpus)]
    if any(partner is not None and _is_malformed(partner) for partner in partners):
        # Excluded as the partner of a malformed conversation.
        return found
    if _translation(record, corpus) is None:
        found.append(make_diagnostic(Code.BAD_TRANSLATION, record.id))
    return found


class _TierValues:
    """Канонические значения одного слоя разметки."""

    def __init__(self, tier: Tier):
        """Инициализация.

        :param tier: Слой с допустимым именем.
        """
        self.invalid: List[str] = []
        counts: Counter[str] = Counter()
        self.ends: Dict[str, int] = {}
        for annotation in tier.annotations:
            if is_delete(tier.name, annotation.value):
                continue
            value = canonical_value(annotation.value)
            if value is None:
                self.invalid.append(annotation.value)
            else:
                counts[value] += 1
                self.ends[value] = max(self.ends.get(value, 0), annotation.end_ms)
        self.duplicates = sorted(value for value, count in counts.items() if count > 1)
        self.unique = {value for value, count in counts.items() if count == 1}


def _key(conversation: str, tier: str, value: str) -> FragmentKey:
    """Ключ фрагмента."""
    return FragmentKey(conversation=conversation, tier=tier, value=value)


def _tier_values(doc: Optional[MarkupDocument]) -> Dict[str, _TierValues]:
    """Значения допустимых слоев документа по имени слоя."""
    if doc is None:
        return {}
    return {
        tier.name: _TierValues(tier)
        for tier in doc.tiers
        if parse_tier_name(tier.name) is not None
    }


def _excluding(diagnostics: Iterable[Diagnostic]) -> Set[str]:
    """Разговоры, которые диагностики исключают целиком."""
    return {
        item.conversation
        for item in diagnostics
        if item.code.excludes_conversation
    }


def _past_end(files: Optional[ConversationFiles], end_ms: int) -> bool:
    """True - интервал заканчивается после последнего кадра записи.

    Запись без известной длины не проверяется.
    """
    if files is None or files.frames is None or files.sample_rate is None:
        return False
    return ms_to_sample(end_ms, files.sample_rate) > files.frames


def _close_over_partners(
    ids: Iterable[str],
    corpus: Corpus,
) -> Set[str]:
    """Добавляет к разговорам их партнеров по номеру, транзитивно."""
    result: Set[str] = set()
    pending = list(ids)
    while pending:
        conversation = pending.pop()
        if conversation in result:
            continue
        result.add(conversation)
        record = corpus.conversation(conversation)
        if record is not None:
            pending.extend(loose_partners(record, corpus))
    return result


def validate_corpus(
    corpus: Corpus,
    markups: Dict[str, MarkupDocument],
) -> ValidationReport:
    """Проверяет корпус и разметку, собирая диагностики и исключения.

    Диагностика уровня разговора исключает разговор вместе с его
    партнером. Диагностика разметки исключает фрагмент и его возможную
    пару. Неверный слой исключает разговор целиком. Фрагмент, который
    заканчивается после конца записи, исключается вместе с парой.

    :param corpus: Корпус.
    :param markups: Разобранная разметка по id разговора.
    :return: ValidationReport с диагностиками в порядке (код, объект).
    """
    diagnostics: List[Diagnostic] = []
    for record in corpus.conversations:
        diagnostics.extend(_check_conversation(record, corpus, markups))
    excluded = _close_over_partners(_excluding(diagnostics), corpus)

    for record in corpus.conversations:
        doc = markups.get(record.id)
        if record.id in excluded or doc is None:
            continue
        for tier in doc.tiers:
            if parse_tier_name(tier.name) is None:
                diagnostics.append(
                    make_diagnostic(Code.BAD_TIER, record.id, tier=tier.name)
                )
    excluded = _close_over_partners(excluded | _excluding(diagnostics), corpus)

    fragments: Set[FragmentKey] = set()
    partners: Dict[str, str] = {}
    for record in corpus.conversations:
        if record.id in excluded:
            continue
        partner = _translation(record, corpus)
        if partner is not None and partner not in excluded:
            partners[record.id] = partner

    values = {record: _tier_values(markups.get(record)) for record in partners}
    for record, tiers in values.items():
        partner = partners[record]
        for tier_name, tier in tiers.items():
            other = values.get(partner, {}).get(tier_name)
            for value in tier.invalid:
                diagnostics.append(
                    make_diagnostic(Code.BAD_MARKUP_VALUE, record, tier_name, value)
                )
                fragments.add(_key(record, tier_name, value))
            for value in tier.duplicates:
                diagnostics.append(
                    make_diagnostic(
                        Code.DUPLICATE_MARKUP_VALUE, record, tier_name, value
                    )
                )
                fragments.update(
                    _key(conversation, tier_name, value)
                    for conversation in (record, partner)
                )
            other_unique = other.unique if other else set()
            other_duplicates = set(other.duplicates) if other else set()
            for value in sorted(tier.unique - other_unique - other_duplicates):
                diagnostics.append(
                    make_diagnostic(
                        Code.FRAGMENT_TRANSLATION_MISMATCH, record, tier_name, value
                    )
                )
                fragments.update(
                    _key(conversation, tier_name, value)
                    for conversation in (record, partner)
                )
            for value in sorted(tier.unique):
                if not _past_end(corpus.files.get(record), tier.ends[value]):
                    continue
                diagnostics.append(
                    make_diagnostic(
                        Code.FRAGMENT_OUT_OF_RANGE, record, tier_name, value
                    )
                )
                fragments.update(
                    _key(conversation, tier_name, value)
                    for conversation in (record, partner)
                )

    report = ValidationReport(
        diagnostics=tuple(sorted(set(diagnostics), key=lambda item: item.sort_key)),
        excluded_conversations=frozenset(excluded),
        excluded_fragments=frozenset(fragments),
    )
    logger.info(
        "Валидация завершена: диагностик %s, исключено разговоров %s, фрагментов %s",
        len(report.diagnostics),
        len(report.excluded_conversations),
        len(report.excluded_fragments),
    )
    return report
