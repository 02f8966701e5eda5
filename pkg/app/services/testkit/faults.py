import re
from typing import Optional, Tuple

from infrastructure.enums import FaultKindEnum, TierNameEnum
from infrastructure.schemas.testkit import AnnotationPlan, ConversationPlan, FixtureSpec
from services.loggs import logger

BAD_OG_RE_CODE = "XX"
BAD_TIER_NAME = "Default"
BAD_VALUE = "#7x"
NUMBER = re.compile(r"[0-9]+")
OVERRUN_MS = 100


def _number(text: str) -> Optional[int]:
    match = NUMBER.search(text)
    return None if match is None else int(match.group())


def _target(spec: FixtureSpec) -> Tuple[ConversationPlan, ConversationPlan]:
    """Первый разговор спецификации и его партнер по номеру."""
    first = spec.conversations[0]
    number = _number(first.id)
    for plan in spec.conversations[1:]:
        if number is not None and _number(plan.id) == number:
            return first, plan
    raise ValueError(f"Conversation {first.id} has no partner in the fixture.")


def _with_annotation(plan: ConversationPlan, tier: str, value: str) -> ConversationPlan:
    """Разговор с еще одной аннотацией на месте первой аннотации Utterance."""
    anchor = next(
        (
            item
            for item in plan.annotations
            if item.tier == TierNameEnum.UTTERANCE.value
        ),
        plan.annotations[0],
    )
    extra = AnnotationPlan(
        tier=tier, value=value, start_ms=anchor.start_ms, end_ms=anchor.end_ms
    )
    return plan.model_copy(update={"annotations": plan.annotations + (extra,)})


def _unused_value(first: ConversationPlan, second: ConversationPlan) -> str:
    """Целое значение, которого нет ни в одном из двух разговоров."""
    used = [
        int(match.group())
        for plan in (first, second)
        for item in plan.annotations
        for match in [NUMBER.search(item.value)]
        if match is not None
    ]
    return str(max(used, default=0) + 1)


def _past_end_annotation(plan: ConversationPlan, value: str) -> ConversationPlan:
    """Разговор с аннотацией Utterance, которая заканчивается за концом записи.

    :raises ValueError: У разговора нет записи.
    """
    if plan.audio is None:
        raise ValueError(f"Conversation {plan.id} has no audio in the fixture.")
    duration = plan.audio.duration_ms
    extra = AnnotationPlan(
        tier=TierNameEnum.UTTERANCE.value,
        value=value,
        start_ms=max(duration - OVERRUN_MS, 0),
        end_ms=duration + OVERRUN_MS,
    )
    return plan.model_copy(update={"annotations": plan.annotations + (extra,)})


def inject_fault(spec: FixtureSpec, kind: FaultKindEnum) -> FixtureSpec:
    """Вносит в чистую спецификацию одну ошибку.

    Ошибка вносится в первый разговор или его партнера и вызывает в
    валидации ровно диагностику `kind.code`.

    :param spec: Чистая спецификация с хотя бы одной аннотацией
        Utterance в первом разговоре.
    :param kind: Вид ошибки.
    :return: FixtureSpec
    """
    first, partner = _target(spec)
    utterance = TierNameEnum.UTTERANCE.value
    match kind:
        case FaultKindEnum.MISSING_MARKUP:
            result = spec.replace(first, first.model_copy(update={"has_markup": False}))
        case FaultKindEnum.MISSING_AUDIO:
            result = spec.replace(first, first.model_copy(update={"audio": None}))
        case FaultKindEnum.BAD_CONVERSATION_ID:
            # Four digits keep the number, so the pair is still found.
            letters, number = partner.id.split("_")
            bad_id = f"{letters}_{int(number):04d}"
            result = spec.replace(partner, partner.model_copy(update={"id": bad_id}))
        case FaultKindEnum.BAD_OG_RE_CODE:
            update = {"original_or_reenacted": BAD_OG_RE_CODE}
            result = spec.replace(partner, partner.model_copy(update=update))
        case FaultKindEnum.BAD_TRANSLATION:
            update = {"original_or_reenacted": first.original_or_reenacted}
            result = spec.replace(partner, partner.model_copy(update=update))
        case FaultKindEnum.BAD_MARKUP_VALUE:
            result = spec.replace(first, _with_annotation(first, utterance, BAD_VALUE))
        case FaultKindEnum.BAD_TIER:
            result = spec.replace(first, _with_annotation(first, BAD_TIER_NAME, "#1"))
        case FaultKindEnum.DUPLICATE_MARKUP_VALUE:
            value = next(
                item.value for item in first.annotations if item.tier == utterance
            )
            result = spec.replace(first, _with_annotation(first, utterance, value))
        case FaultKindEnum.FRAGMENT_TRANSLATION_MISMATCH:
            value = f"#{_unused_value(first, partner)}"
            result = spec.replace(first, _with_annotation(first, utterance, value))
        case FaultKindEnum.FRAGMENT_OUT_OF_RANGE:
            value = f"#{_unused_value(first, partner)}"
            result = spec.replace(partner, _with_annotation(partner, utterance, value))
            result = result.replace(first, _past_end_annotation(first, value))
    logger.debug("Ошибка %s внесена в разговор %s", kind.value, first.id)
    return result
