__all__ = (
    "build_pair",
    "build_release",
    "compute_stats",
    "format_stats",
    "fragment_row",
    "mean_seconds",
    "redact",
    "stats_rows",
    "validate_input",
)

from .builder import (
    build_pair,
    build_release,
    fragment_row,
    redact,
    validate_input,
)
from .stats import compute_stats, format_stats, mean_seconds, stats_rows
