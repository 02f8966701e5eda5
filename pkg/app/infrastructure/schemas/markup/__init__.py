__all__ = (
    "Annotation",
    "Tier",
    "MarkupDocument",
)

from .documents import Annotation, MarkupDocument, Tier
