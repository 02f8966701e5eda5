__all__ = (
    "annotation_key",
    "canonical_value",
    "is_delete",
    "loose_partners",
    "make_diagnostic",
    "parse_tier_name",
    "print_report",
    "validate_corpus",
    "write_report",
)

from .messages import make_diagnostic
from .report import print_report, write_report
from .rules import annotation_key, canonical_value, is_delete, parse_tier_name
from .validator import loose_partners, validate_corpus
