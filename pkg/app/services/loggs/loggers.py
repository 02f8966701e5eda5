from logging import INFO

from core import settings

from .formatters import ReportFormatter
from .main import get_logger

report_logger = get_logger(
    settings.LOGGING.REPORT_LOGGER_NAME,
    INFO,
    ReportFormatter,
    file_enabled=False,
)
