__all__ = (
    "LanguageCode",
    "ConversationId",
    "Participant",
    "Producer",
    "ConversationRecord",
    "ConversationFiles",
    "Corpus",
)

from .corpus import ConversationFiles, Corpus
from .metadata import ConversationRecord, Participant, Producer
from .naming import ConversationId, LanguageCode
