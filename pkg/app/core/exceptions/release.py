from core import settings

from .base import CorpusToolError


class ReleaseError(CorpusToolError):
    """Исключение - релиз не может быть собран."""


class StrictModeError(ReleaseError):
    """Исключение - в строгом режиме найдены диагностики."""

    def __init__(
        self,
        diagnostics_count: int,
        message: str = settings.RELEASE.STRICT_MODE_MSG,
    ):
        """Инициализация исключения StrictModeError.

        :param diagnostics_count: Число найденных диагностик.
        :param message: Сообщение об ошибке. По умолчанию используется
            значение из настроек `settings.RELEASE.STRICT_MODE_MSG`.
        """
        self.diagnostics_count = diagnostics_count
        super().__init__(f"{message} ({diagnostics_count} diagnostics)")


class StatsError(CorpusToolError):
    """Исключение - статистика не может быть посчитана."""
