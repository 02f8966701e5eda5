from enum import Enum

from .corpus_enums import DiagnosticCodeEnum


class FaultKindEnum(Enum):
    """Enum ошибок, внедряемых в синтетический корпус.

    Каждому коду диагностики соответствует одна ошибка.
    """

    MISSING_MARKUP = "MISSING_MARKUP"
    MISSING_AUDIO = "MISSING_AUDIO"
    BAD_CONVERSATION_ID = "BAD_CONVERSATION_ID"
    BAD_OG_RE_CODE = "BAD_OG_RE_CODE"
    BAD_TRANSLATION = "BAD_TRANSLATION"
    BAD_MARKUP_VALUE = "BAD_MARKUP_VALUE"
    BAD_TIER = "BAD_TIER"
    DUPLICATE_MARKUP_VALUE = "DUPLICATE_MARKUP_VALUE"
    FRAGMENT_TRANSLATION_MISMATCH = "FRAGMENT_TRANSLATION_MISMATCH"
    FRAGMENT_OUT_OF_RANGE = "FRAGMENT_OUT_OF_RANGE"

    @property
    def code(self) -> DiagnosticCodeEnum:
        """Код диагностики, который вызывает ошибка."""
        return DiagnosticCodeEnum(self.value)
