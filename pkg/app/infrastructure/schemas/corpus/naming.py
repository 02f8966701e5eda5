import re
from typing import Any

from pydantic import Field, field_validator, model_validator

from ...enums import ISO_639_1_CODES
from ..abc import ABCSchema

LANGUAGE_CODE_PATTERN = re.compile(r"^[A-Za-z]{2}$")


class LanguageCode(ABCSchema):
    """Двухбуквенный код языка ISO 639-1 в нижнем регистре."""

    code: str

    @model_validator(mode="before")
    @classmethod
    def from_text(cls, data: Any) -> Any:
        """Позволяет передавать код языка строкой."""
        if isinstance(data, str):
            return {"code": data}
        return data

    @field_validator("code")
    @classmethod
    def check_code(cls, code: str) -> str:
        """Проверяет код по таблице ISO 639-1 и приводит к нижнему регистру.

        :param code: Исходный код.
        :raises ValueError: Код не из двух латинских букв или не назначен.
        :return: Код в нижнем регистре.
        """
        if not LANGUAGE_CODE_PATTERN.match(code):
            raise ValueError(f"Language code {code!r} is not two ASCII letters.")
        lowered = code.lower()
        if lowered not in ISO_639_1_CODES:
            raise ValueError(f"Language code {code!r} is not assigned in ISO 639-1.")
        return lowered

    def __str__(self) -> str:
        """Код в нижнем регистре."""
        return self.code


class ConversationId(ABCSchema):
    """Идентификатор разговора: язык и трехзначный номер."""

    lang: LanguageCode
    number: int = Field(..., ge=0, le=999)

    @property
    def canonical(self) -> str:
        """Каноническая запись в виде `XX_ddd`, как в именах файлов."""
        return f"{self.lang.code.upper()}_{self.number:03d}"

    def __str__(self) -> str:
        """Каноническая запись идентификатора."""
        return self.canonical
