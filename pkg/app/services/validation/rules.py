import re
from typing import Optional

from core import settings
from infrastructure.enums import TierNameEnum
from infrastructure.schemas.markup import Annotation

MARKUP_VALUE = re.compile(r"^#?([0-9]+(?:\.[0-9]+)?)$")
TIER_NAMES = frozenset(tier.value for tier in TierNameEnum)


def canonical_value(value: str) -> Optional[str]:
    """Каноническое значение разметки: цифры без ведущего `#`.

    Точечный суффикс сохраняется как есть.

    :param value: Значение аннотации.
    :return: Каноническое значение или None, если значение неверное.
    """
    match = MARKUP_VALUE.match(value)
    return None if match is None else match.group(1)


def is_delete(tier_name: str, value: str) -> bool:
    """True - аннотация является директивой удаления в слое Utterance."""
    return (
        tier_name == TierNameEnum.UTTERANCE.value
        and value == settings.CORPUS.DELETE_DIRECTIVE
    )


def parse_tier_name(name: str) -> Optional[TierNameEnum]:
    """Возвращает слой по имени, None для неизвестных имен."""
    if name not in TIER_NAMES:
        return None
    return TierNameEnum(name)


def annotation_key(tier_name: str, annotation: Annotation) -> str:
    """Значение, под которым аннотация попадает в ключ фрагмента.

    Для верных значений это каноническое значение, для остальных
    исходный текст.
    """
    if is_delete(tier_name, annotation.value):
        return annotation.value
    return canonical_value(annotation.value) or annotation.value
