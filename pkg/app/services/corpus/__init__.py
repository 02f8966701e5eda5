__all__ = (
    "Metadata",
    "canonical_id",
    "discover_corpus",
    "find_translation",
    "load_markups",
    "load_metadata",
    "loose_key",
    "parse_conversation_id",
    "parse_og_re",
    "translation_candidates",
    "try_parse_conversation_id",
    "write_metadata",
)

from .discovery import discover_corpus, load_markups
from .metadata import Metadata, load_metadata, write_metadata
from .naming import (
    canonical_id,
    find_translation,
    loose_key,
    parse_conversation_id,
    parse_og_re,
    translation_candidates,
    try_parse_conversation_id,
)
