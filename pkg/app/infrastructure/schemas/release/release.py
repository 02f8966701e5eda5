from pathlib import Path
from typing import Dict, Optional

from pydantic import Field, model_validator

from core import settings

from ..abc import ABCSchema


class ReleaseConfig(ABCSchema):
    """Параметры сборки релиза."""

    input_dir: Path
    output_dir: Path
    strict: bool = False
    report_path: Optional[Path] = None
    workers: int = Field(settings.RELEASE.WORKERS, ge=1)

    @model_validator(mode="after")
    def check_dirs(self) -> "ReleaseConfig":
        """Проверяет, что входная и выходная директории различаются."""
        if self.input_dir.resolve() == self.output_dir.resolve():
            raise ValueError(settings.RELEASE.SAME_DIRS_MSG)
        return self


class ReleaseManifest(ABCSchema):
    """Сводка собранного релиза.

    Счетчики равны числу действительно записанных файлов.
    """

    conversations: tuple[str, ...] = ()
    excluded_conversations: tuple[str, ...] = ()
    counts: Dict[str, int] = {}
    diagnostics: Dict[str, int] = {}
    redaction_mode: str = settings.RELEASE.REDACTION_MODE


class CorpusStats(ABCSchema):
    """Статистика корпуса в духе сводной таблицы релиза."""

    conversations: int = 0
    participants: int = 0
    long_pairs: int = 0
    mean_long_duration_s: float = 0.0
    short_pairs: int = 0
    mean_short_duration_s: float = 0.0


class FragmentRow(ABCSchema):
    """Строка таблицы фрагментов релиза."""

    id: str
    time_start: str
    time_end: str
    duration: str
    conv_id: str
    trans_id: str
