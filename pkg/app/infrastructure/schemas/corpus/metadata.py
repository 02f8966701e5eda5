import re
from typing import Optional

from pydantic import Field, field_validator, model_validator

from ..abc import ABCSchema
from .naming import LanguageCode

DATE_PATTERN = re.compile(r"^(0[1-9]|[12][0-9]|3[01])_(0[1-9]|1[0-2])_[0-9]{4}$")

STRENGTH_LABELS = {
    1: "language 1 stronger",
    2: "language 1 slightly stronger",
    3: "equal",
    4: "language 2 slightly stronger",
    5: "language 2 stronger",
}


class Participant(ABCSchema):
    """Строка таблицы участников."""

    id: int
    lang1: LanguageCode
    lang2: LanguageCode
    lang_strength: int = Field(..., ge=1, le=5)
    dialect_note1: str = ""
    dialect_note2: str = ""
    is_producer: bool = False
    notes: str = ""

    @model_validator(mode="after")
    def check_languages(self) -> "Participant":
        """Проверяет, что языки участника различаются."""
        if self.lang1 == self.lang2:
            raise ValueError("lang1 and lang2 must differ.")
        return self

    @property
    def strength_label(self) -> str:
        """Подпись шкалы владения языками из анкеты."""
        return STRENGTH_LABELS[self.lang_strength]


class Producer(ABCSchema):
    """Строка таблицы операторов записи."""

    id: int
    name: str = ""


class ConversationRecord(ABCSchema):
    """Строка таблицы разговоров.

    Идентификатор и код OG/RE хранятся в исходном виде: их проверка
    выполняется валидацией корпуса, а не загрузкой таблицы.
    """

    id: str
    date: str
    original_or_reenacted: str
    participant_id_left: int
    participant_id_right: int
    producer_id: int
    trans_id: Optional[str] = None

    @field_validator("date")
    @classmethod
    def check_date(cls, date: str) -> str:
        """Проверяет формат даты dd_mm_yyyy."""
        if not DATE_PATTERN.match(date):
            raise ValueError(f"Date {date!r} does not match dd_mm_yyyy.")
        return date
