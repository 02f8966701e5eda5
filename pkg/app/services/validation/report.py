from itertools import groupby
from pathlib import Path

from infrastructure.repositories.tables import DiagnosticReportRepository
from infrastructure.schemas.validation import ValidationReport
from services.loggs import logger, report_logger

from .messages import TEXTS


def print_report(report: ValidationReport) -> None:
    """Печатает отчет валидации в stderr, группируя диагностики по коду.

    :param report: Результат валидации.
    """
    if report.is_clean:
        report_logger.info("No problems found.")
        return
    for code, group in groupby(report.diagnostics, key=lambda item: item.code):
        items = list(group)
        heading = TEXTS[code].heading
        report_logger.warning("%s: %s (%s)", code.value, heading, len(items))
        for item in items:
            report_logger.warning("  %s: %s", item.subject, item.message)
            report_logger.warning("    hint: %s", item.hint)
    excluded = ", ".join(sorted(report.excluded_conversations)) or "none"
    report_logger.warning("Excluded conversations: %s", excluded)
    report_logger.warning("Excluded fragments: %s", len(report.excluded_fragments))


def write_report(report: ValidationReport, path: Path) -> None:
    """Записывает машиночитаемый отчет: code, subject, message, hint.

    :param report: Результат валидации.
    :param path: Путь к CSV файлу отчета.
    """
    DiagnosticReportRepository(path).dump(report.diagnostics)
    logger.info("Отчет валидации записан: %s", path)
