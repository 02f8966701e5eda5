import re
from collections import defaultdict
from typing import Dict, List, Optional, Set, Tuple

from core import settings
from infrastructure.enums import ISO_639_1_CODES
from infrastructure.schemas.release import CorpusStats
from infrastructure.schemas.testkit import (
    AnnotationPlan,
    ConversationPlan,
    FixtureSpec,
    OracleResult,
)

VALUE = re.compile(r"^#?([0-9]+(?:\.[0-9]+)?)$")
CONVERSATION_ID = re.compile(r"^([A-Za-z]{2})_([0-9]{3})$")
DIGITS = re.compile(r"([0-9]+)")
UTTERANCE = "Utterance"
# Tier name -> file name suffix.
TIER_SUFFIXES = {UTTERANCE: "", "LittleLeft": "_L", "LittleRight": "_R"}


def _value(item: AnnotationPlan) -> Optional[str]:
    match = VALUE.match(item.value.strip())
    return None if match is None else match.group(1)


def _is_delete(item: AnnotationPlan) -> bool:
    return (
        item.tier == UTTERANCE
        and item.value.strip() == settings.CORPUS.DELETE_DIRECTIVE
    )


def _well_formed(plan: ConversationPlan) -> bool:
    match = CONVERSATION_ID.match(plan.id)
    return (
        match is not None
        and match.group(1).lower() in ISO_639_1_CODES
        and plan.original_or_reenacted in ("OG", "RE")
    )


def _usable(plan: ConversationPlan) -> bool:
    return (
        _well_formed(plan)
        and plan.has_markup
        and plan.audio is not None
        and all(item.tier in TIER_SUFFIXES for item in plan.annotations)
    )


def _valid_pair(group: List[ConversationPlan]) -> bool:
    if len(group) != 2 or not all(_usable(plan) for plan in group):
        return False
    first, second = group
    return (
        first.id[:2].upper() != second.id[:2].upper()
        and first.original_or_reenacted != second.original_or_reenacted
    )


def _hits_delete(item: AnnotationPlan, plan: ConversationPlan) -> bool:
    return any(
        _is_delete(other)
        and item.start_ms < other.end_ms
        and other.start_ms < item.end_ms
        for other in plan.annotations
    )


def _inside(item: AnnotationPlan, plan: ConversationPlan) -> bool:
    return plan.audio is not None and item.end_ms <= plan.audio.duration_ms


def _matches(
    item: AnnotationPlan,
    plan: ConversationPlan,
) -> List[AnnotationPlan]:
    """Аннотации разговора в том же слое с тем же значением."""
    return [
        other
        for other in plan.annotations
        if other.tier == item.tier
        and not _is_delete(other)
        and _value(other) == _value(item)
    ]


def _pairs(
    og: ConversationPlan,
    re_: ConversationPlan,
) -> List[Tuple[AnnotationPlan, AnnotationPlan, str]]:
    """Пары аннотаций (оригинал, воспроизведение, значение)."""
    found = []
    for item in og.annotations:
        if _is_delete(item) or _value(item) is None:
            continue
        own = _matches(item, og)
        other = _matches(item, re_)
        if len(own) != 1 or len(other) != 1:
            continue
        if _hits_delete(item, og) or _hits_delete(other[0], re_):
            continue
        if not (_inside(item, og) and _inside(other[0], re_)):
            continue
        found.append((item, other[0], str(_value(item))))
    return found


def _name(plan: ConversationPlan, tier: str, value: str) -> str:
    return f"{plan.id.upper()}_{value}{TIER_SUFFIXES[tier]}"


def _mean(durations: List[int]) -> float:
    """Среднее в секундах, половина десятой округляется вверх."""
    if not durations:
        return 0.0
    count = len(durations)
    tenths = (2 * sum(durations) + 100 * count) // (200 * count)
    return tenths / 10


def oracle_pairs(spec: FixtureSpec) -> OracleResult:
    """Ожидаемые пары, исключения и статистика перебором аннотаций.

    Разговоры группируются по номеру; группа из двух корректных
    разговоров с разными языками и кодами образует пару. Аннотация
    оригинала дает пару фрагментов, если ее значение встречается ровно
    один раз в слое каждого разговора и ни одна из двух аннотаций не
    пересекает директиву удаления своего разговора и не выходит за
    конец его записи.

    :param spec: Чистая спецификация или спецификация с ошибкой.
    :return: OracleResult
    """
    groups: Dict[int, List[ConversationPlan]] = defaultdict(list)
    for plan in spec.conversations:
        digits = DIGITS.search(plan.id)
        if digits is not None:
            groups[int(digits.group())].append(plan)

    included: List[ConversationPlan] = []
    pairs: Set[Tuple[str, str]] = set()
    durations: Dict[bool, List[int]] = {True: [], False: []}
    for group in groups.values():
        if not _valid_pair(group):
            continue
        og, re_ = sorted(group, key=lambda plan: plan.original_or_reenacted)
        included.extend((og, re_))
        for og_item, re_item, value in _pairs(og, re_):
            pairs.add(
                (_name(og, og_item.tier, value), _name(re_, re_item.tier, value))
            )
            long = og_item.tier == UTTERANCE
            for item in (og_item, re_item):
                durations[long].append(item.end_ms - item.start_ms)

    known = {participant.id for participant in spec.participants}
    speakers = {
        speaker
        for plan in included
        for speaker in (plan.participant_id_left, plan.participant_id_right)
        if speaker in known
    }
    included_ids = {plan.id for plan in included}
    return OracleResult(
        pairs=frozenset(pairs),
        conversations=tuple(sorted(plan.id.upper() for plan in included)),
        excluded=frozenset(
            plan.id for plan in spec.conversations if plan.id not in included_ids
        ),
        stats=CorpusStats(
            conversations=len(included),
            participants=len(speakers),
            long_pairs=len(durations[True]) // 2,
            mean_long_duration_s=_mean(durations[True]),
            short_pairs=len(durations[False]) // 2,
            mean_short_duration_s=_mean(durations[False]),
        ),
    )
