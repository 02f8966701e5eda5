from typing import Dict, Optional

from ...enums import DiagnosticCodeEnum
from ..abc import ABCSchema


class FragmentKey(ABCSchema):
    """Ключ фрагмента: разговор, слой и каноническое значение разметки."""

    conversation: str
    tier: str
    value: str

    def __str__(self) -> str:
        """Текстовая запись ключа."""
        return f"{self.conversation}/{self.tier}/{self.value}"


class Diagnostic(ABCSchema):
    """Одна находка валидации со стабильным кодом."""

    code: DiagnosticCodeEnum
    conversation: str
    tier: Optional[str] = None
    value: Optional[str] = None
    message: str
    hint: str

    @property
    def subject(self) -> str:
        """Объект диагностики: разговор или (разговор, слой, значение)."""
        parts = [self.conversation]
        if self.tier is not None:
            parts.append(self.tier)
        if self.value is not None:
            parts.append(self.value)
        return " / ".join(parts)

    @property
    def sort_key(self) -> tuple[int, str, str, str]:
        """Ключ сортировки: порядок кода, затем объект."""
        return (
            self.code.order,
            self.conversation,
            self.tier or "",
            self.value or "",
        )


class ValidationReport(ABCSchema):
    """Результат валидации корпуса: диагностики и исключения."""

    diagnostics: tuple[Diagnostic, ...] = ()
    excluded_conversations: frozenset[str] = frozenset()
    excluded_fragments: frozenset[FragmentKey] = frozenset()

    @property
    def is_clean(self) -> bool:
        """True - диагностик нет."""
        return not self.diagnostics

    def counts(self) -> Dict[str, int]:
        """Число диагностик по кодам, в порядке кодов."""
        result: Dict[str, int] = {}
        for code in DiagnosticCodeEnum:
            count = sum(1 for item in self.diagnostics if item.code is code)
            if count:
                result[code.value] = count
        return result
