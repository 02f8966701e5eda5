from typing import Dict, FrozenSet, List

from infrastructure.enums import OgReEnum
from infrastructure.schemas.corpus import ConversationRecord, Corpus
from infrastructure.schemas.markup import MarkupDocument, Tier
from infrastructure.schemas.pairing import ConversationPair
from infrastructure.schemas.validation import FragmentKey, ValidationReport
from services.corpus import canonical_id, find_translation, parse_og_re
from services.loggs import logger
from services.validation import annotation_key, parse_tier_name

from .fragments import apply_redactions, extract_fragments, pair_fragments


def strip_excluded(
    record: ConversationRecord,
    doc: MarkupDocument,
    excluded: FrozenSet[FragmentKey],
) -> MarkupDocument:
    """Удаляет из разметки неизвестные слои и исключенные фрагменты.

    :param record: Разговор.
    :param doc: Разметка разговора.
    :param excluded: Исключенные валидацией фрагменты.
    :return: Разметка, пригодная для извлечения фрагментов.
    """
    tiers = []
    for tier in doc.tiers:
        if parse_tier_name(tier.name) is None:
            continue
        annotations = tuple(
            annotation
            for annotation in tier.annotations
            if FragmentKey(
                conversation=record.id,
                tier=tier.name,
                value=annotation_key(tier.name, annotation),
            )
            not in excluded
        )
        tiers.append(Tier(name=tier.name, annotations=annotations))
    return MarkupDocument(media_descriptors=doc.media_descriptors, tiers=tuple(tiers))


def pair_conversations(
    og: ConversationRecord,
    re: ConversationRecord,
    og_doc: MarkupDocument,
    re_doc: MarkupDocument,
) -> ConversationPair:
    """Сопоставляет фрагменты оригинала и воспроизведения.

    Фрагменты, пересекающие интервал удаления, отбрасываются до
    сопоставления, поэтому их пара остается без партнера и тоже
    не попадает в релиз.

    :param og: Оригинал.
    :param re: Воспроизведение.
    :param og_doc: Разметка оригинала без исключенных фрагментов.
    :param re_doc: Разметка воспроизведения без исключенных фрагментов.
    :return: ConversationPair
    """
    og_frags, og_spans = extract_fragments(og, og_doc)
    re_frags, re_spans = extract_fragments(re, re_doc)
    og_kept, og_dropped = apply_redactions(og_frags, og_spans)
    re_kept, re_dropped = apply_redactions(re_frags, re_spans)
    pairs, unmatched = pair_fragments(og_kept, re_kept)
    if unmatched:
        logger.debug("%s: фрагментов без пары %s", og.id, len(unmatched))
    return ConversationPair(
        og=og,
        re=re,
        pairs=tuple(pairs),
        redactions=tuple(og_spans + re_spans),
        dropped=tuple(og_dropped + re_dropped + unmatched),
    )


def plan_pairs(
    corpus: Corpus,
    markups: Dict[str, MarkupDocument],
    report: ValidationReport,
) -> List[ConversationPair]:
    """Строит пары фрагментов для всех прошедших валидацию разговоров.

    :param corpus: Корпус.
    :param markups: Разметка по id разговора.
    :param report: Результат валидации того же корпуса.
    :return: Пары разговоров по id оригинала.
    """
    plans: List[ConversationPair] = []
    for record in corpus.conversations:
        if record.id in report.excluded_conversations:
            continue
        if parse_og_re(record.original_or_reenacted) is not OgReEnum.ORIGINAL:
            continue
        partner = corpus.conversation(find_translation(record, corpus).id)
        if partner is None:
            continue
        og = record.model_copy(update={"trans_id": canonical_id(partner)})
        re = partner.model_copy(update={"trans_id": canonical_id(record)})
        plans.append(
            pair_conversations(
                og,
                re,
                strip_excluded(record, markups[record.id], report.excluded_fragments),
                strip_excluded(partner, markups[partner.id], report.excluded_fragments),
            )
        )
    plans.sort(key=lambda plan: canonical_id(plan.og))
    logger.info(
        "Сопоставление завершено: пар разговоров %s, пар фрагментов %s",
        len(plans),
        sum(len(plan.pairs) for plan in plans),
    )
    return plans
