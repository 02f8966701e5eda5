__all__ = (
    "AnnotationPlan",
    "AudioPlan",
    "ConversationPlan",
    "FixtureSpec",
    "OracleResult",
)

from .plans import (
    AnnotationPlan,
    AudioPlan,
    ConversationPlan,
    FixtureSpec,
    OracleResult,
)
