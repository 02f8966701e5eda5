__all__ = (
    "ConversationPair",
    "Fragment",
    "FragmentId",
    "FragmentPair",
    "RedactionSpan",
)

from .fragments import (
    ConversationPair,
    Fragment,
    FragmentId,
    FragmentPair,
    RedactionSpan,
)
