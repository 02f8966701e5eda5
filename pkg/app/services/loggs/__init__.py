__all__ = (
    "logger",
    "report_logger",
    "logg_error_data",
)

from .loggers import report_logger
from .main import logger
from .utils import logg_error_data
