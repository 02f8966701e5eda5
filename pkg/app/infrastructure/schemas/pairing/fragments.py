from typing import List

from pydantic import Field, model_validator

from ...enums import FragmentKindEnum, SideEnum
from ..abc import ABCSchema
from ..corpus import ConversationId, ConversationRecord, LanguageCode


class Fragment(ABCSchema):
    """Размеченный интервал одного разговора."""

    conv_id: ConversationId
    kind: FragmentKindEnum
    side: SideEnum
    canonical_value: str = Field(..., pattern=r"^[0-9]+(\.[0-9]+)?$")
    start_ms: int = Field(..., ge=0)
    end_ms: int

    @model_validator(mode="after")
    def check_fragment(self) -> "Fragment":
        """Проверяет согласованность вида и канала и границы интервала."""
        if self.start_ms >= self.end_ms:
            raise ValueError("Fragment start must be before its end.")
        long_kind = self.kind is FragmentKindEnum.LONG
        mixed_side = self.side is SideEnum.MIXED
        if long_kind != mixed_side:
            raise ValueError("Long fragments are mixed, short ones have a side.")
        return self

    @property
    def duration_ms(self) -> int:
        """Длительность фрагмента в миллисекундах."""
        return self.end_ms - self.start_ms

    @property
    def match_key(self) -> tuple[FragmentKindEnum, SideEnum, str]:
        """Ключ сопоставления с фрагментом перевода."""
        return self.kind, self.side, self.canonical_value


class FragmentId(ABCSchema):
    """Идентификатор фрагмента `<LANG>_<ddd>_<value>`."""

    lang: LanguageCode
    conv_number: int = Field(..., ge=0, le=999)
    value: str

    def __str__(self) -> str:
        """Текстовая запись идентификатора."""
        return f"{self.lang.code.upper()}_{self.conv_number:03d}_{self.value}"


class FragmentPair(ABCSchema):
    """Пара фрагментов: оригинал и его воспроизведение."""

    og: Fragment
    re: Fragment

    @model_validator(mode="after")
    def check_pair(self) -> "FragmentPair":
        """Проверяет совпадение вида, канала и значения у членов пары."""
        if self.og.match_key != self.re.match_key:
            raise ValueError("Pair members differ in kind, side or value.")
        if self.og.conv_id == self.re.conv_id:
            raise ValueError("Pair members come from the same conversation.")
        return self


class RedactionSpan(ABCSchema):
    """Интервал, помеченный директивой DELETE."""

    conv_id: ConversationId
    start_ms: int = Field(..., ge=0)
    end_ms: int

    @model_validator(mode="after")
    def check_span(self) -> "RedactionSpan":
        """Проверяет, что начало интервала раньше конца."""
        if self.start_ms >= self.end_ms:
            raise ValueError("Redaction start must be before its end.")
        return self


class ConversationPair(ABCSchema):
    """Оригинал и воспроизведение с найденными парами фрагментов.

    Пары отсортированы по началу фрагмента оригинала, интервалы
    удаления хранятся для обоих разговоров.
    """

    og: ConversationRecord
    re: ConversationRecord
    pairs: tuple[FragmentPair, ...] = ()
    redactions: tuple[RedactionSpan, ...] = ()
    dropped: tuple[Fragment, ...] = ()

    def pairs_of(self, kind: FragmentKindEnum) -> List[FragmentPair]:
        """Пары фрагментов указанного вида."""
        return [pair for pair in self.pairs if pair.og.kind is kind]

    def redactions_for(self, conv_id: ConversationId) -> List[RedactionSpan]:
        """Интервалы удаления одного разговора."""
        return [span for span in self.redactions if span.conv_id == conv_id]
