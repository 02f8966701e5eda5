__all__ = (
    "apply_redactions",
    "extract_fragments",
    "fragment_id",
    "fragment_name",
    "overlaps",
    "pair_conversations",
    "pair_fragments",
    "plan_pairs",
    "strip_excluded",
)

from .fragments import (
    apply_redactions,
    extract_fragments,
    fragment_id,
    fragment_name,
    overlaps,
    pair_fragments,
)
from .planner import pair_conversations, plan_pairs, strip_excluded
