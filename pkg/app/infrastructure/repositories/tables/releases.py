from pathlib import Path
from typing import Any, Dict, Type

from core import settings
from infrastructure.schemas.release import FragmentRow
from infrastructure.schemas.validation import Diagnostic

from .abc import ABCTableRepository


class FragmentRepository(ABCTableRepository[FragmentRow]):
    """Таблица фрагментов релиза.

    Имя файла задается при создании: длинные и короткие фрагменты
    хранятся в разных таблицах с одинаковым заголовком.
    """

    schema = FragmentRow
    header = ("id", "time_start", "time_end", "duration", "conv_id", "trans_id")

    def __init__(self, directory: Path, file_name: str):
        """Инициализация репозитория.

        :param directory: Корневая директория релиза.
        :param file_name: Имя файла таблицы.
        """
        super().__init__(directory)
        self.file_name = file_name

    @classmethod
    def long(cls: Type["FragmentRepository"], directory: Path) -> "FragmentRepository":
        """Таблица длинных фрагментов релиза."""
        return cls(directory, settings.RELEASE.LONG_TABLE)

    @classmethod
    def short(
        cls: Type["FragmentRepository"], directory: Path
    ) -> "FragmentRepository":
        """Таблица коротких фрагментов релиза."""
        return cls(directory, settings.RELEASE.SHORT_TABLE)


class DiagnosticReportRepository(ABCTableRepository[Diagnostic]):
    """Машиночитаемый отчет валидации: одна строка на диагностику.

    Столбец subject дублирует разговор, слой и значение для чтения
    человеком; при загрузке используются отдельные столбцы.
    """

    schema = Diagnostic
    header = ("code", "subject", "conversation", "tier", "value", "message", "hint")

    def __init__(self, path: Path):
        """Инициализация репозитория.

        :param path: Путь к файлу отчета.
        """
        super().__init__(path.parent)
        self.file_name = path.name

    def prepare_row(self, row: Dict[str, str]) -> Dict[str, Any]:
        """Пустые слой и значение читаются как отсутствующие."""
        return {
            "code": row["code"],
            "conversation": row["conversation"],
            "tier": row["tier"] or None,
            "value": row["value"] or None,
            "message": row["message"],
            "hint": row["hint"],
        }

    def create_row_from_schema(self, schema: Diagnostic) -> Dict[str, str]:
        """Создает строку отчета из диагностики."""
        return {
            "code": schema.code.value,
            "subject": schema.subject,
            "conversation": schema.conversation,
            "tier": schema.tier or "",
            "value": schema.value or "",
            "message": schema.message,
            "hint": schema.hint,
        }
