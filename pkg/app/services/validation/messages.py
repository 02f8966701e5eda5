from typing import Dict, NamedTuple, Optional

from infrastructure.enums import DiagnosticCodeEnum
from infrastructure.schemas.validation import Diagnostic


class DiagnosticText(NamedTuple):
    """Заголовок группы, шаблоны сообщения и подсказки для кода."""

    heading: str
    message: str
    hint: str


TEXTS: Dict[DiagnosticCodeEnum, DiagnosticText] = {
    DiagnosticCodeEnum.MISSING_MARKUP: DiagnosticText(
        "Conversations without markup",
        "No readable markup file named after conversation {conversation}.",
        "Save the markup as {conversation}.eaf next to the recording.",
    ),
    DiagnosticCodeEnum.MISSING_AUDIO: DiagnosticText(
        "Conversations without audio",
        "No audio file named after conversation {conversation}.",
        "Add {conversation}.wav, or a {conversation}/ folder with one WAV "
        "per participant named by participant id.",
    ),
    DiagnosticCodeEnum.BAD_CONVERSATION_ID: DiagnosticText(
        "Conversations with an invalid ID",
        "Conversation ID {conversation!r} is invalid.",
        "Use a two-letter ISO 639-1 code, an underscore and three digits, "
        "e.g. EN_006.",
    ),
    DiagnosticCodeEnum.BAD_OG_RE_CODE: DiagnosticText(
        "Conversations with an invalid original/re-enacted code",
        "Conversation {conversation} has an original_or_reenacted value "
        "other than OG or RE.",
        "Set original_or_reenacted to OG or RE.",
    ),
    DiagnosticCodeEnum.BAD_TRANSLATION: DiagnosticText(
        "Conversations without exactly one translation",
        "Conversation {conversation} does not have exactly one translation "
        "with the same number, another language and the opposite OG/RE code.",
        "Check the IDs and OG/RE codes of conversations sharing the number of "
        "{conversation}.",
    ),
    DiagnosticCodeEnum.BAD_MARKUP_VALUE: DiagnosticText(
        "Markups with invalid values",
        "Markup value {value!r} in tier {tier} of {conversation} is not an "
        "optional '#' followed by digits.",
        "Fix the typo, or remove the annotation if it is a comment.",
    ),
    DiagnosticCodeEnum.BAD_TIER: DiagnosticText(
        "Markups in an invalid tier",
        "Tier {tier!r} of {conversation} is not Utterance, LittleLeft or "
        "LittleRight.",
        "Rename the tier, e.g. the default tier to Utterance.",
    ),
    DiagnosticCodeEnum.DUPLICATE_MARKUP_VALUE: DiagnosticText(
        "Markups with duplicate values",
        "Markup value {value} occurs more than once in tier {tier} of "
        "{conversation}.",
        "Give each region in the tier its own number.",
    ),
    DiagnosticCodeEnum.FRAGMENT_TRANSLATION_MISMATCH: DiagnosticText(
        "Markups without a matching translation",
        "Markup value {value} in tier {tier} of {conversation} has no "
        "single match in the same tier of the translation.",
        "Mark the matching region in the translation with the same value.",
    ),
    DiagnosticCodeEnum.FRAGMENT_OUT_OF_RANGE: DiagnosticText(
        "Markups past the end of the recording",
        "Markup value {value} in tier {tier} of {conversation} ends after "
        "the end of the recording.",
        "Move the region inside the recording, or check that the markup "
        "belongs to this audio.",
    ),
}


def make_diagnostic(
    code: DiagnosticCodeEnum,
    conversation: str,
    tier: Optional[str] = None,
    value: Optional[str] = None,
) -> Diagnostic:
    """Создает диагностику с сообщением и подсказкой для кода и объекта.

    :param code: Код диагностики.
    :param conversation: Идентификатор разговора как в таблице.
    :param tier: Имя слоя для диагностик разметки.
    :param value: Значение разметки.
    :return: Diagnostic
    """
    text = TEXTS[code]
    fields = {"conversation": conversation, "tier": tier, "value": value}
    return Diagnostic(
        code=code,
        conversation=conversation,
        tier=tier,
        value=value,
        message=text.message.format(**fields),
        hint=text.hint.format(**fields),
    )
