from typing import List, Optional

from pydantic import Field, field_validator, model_validator

from ..abc import ABCSchema


class Annotation(ABCSchema):
    """Аннотация слоя разметки с границами в миллисекундах."""

    value: str
    start_ms: int = Field(..., ge=0)
    end_ms: int

    @field_validator("value")
    @classmethod
    def trim_value(cls, value: str) -> str:
        """Обрезает пробельные символы по краям значения.

        :param value: Исходное значение аннотации.
        :raises ValueError: Значение пустое после обрезки.
        :return: Обрезанное значение.
        """
        trimmed = value.strip()
        if not trimmed:
            raise ValueError("Annotation value is empty.")
        return trimmed

    @model_validator(mode="after")
    def check_span(self) -> "Annotation":
        """Проверяет, что начало аннотации строго раньше конца."""
        if self.start_ms >= self.end_ms:
            raise ValueError(
                f"Annotation start {self.start_ms} is not before end {self.end_ms}."
            )
        return self

    @property
    def sort_key(self) -> tuple[int, int, str]:
        """Ключ сортировки аннотаций внутри слоя."""
        return self.start_ms, self.end_ms, self.value


class Tier(ABCSchema):
    """Именованный слой аннотаций."""

    name: str
    annotations: tuple[Annotation, ...] = ()

    @field_validator("annotations")
    @classmethod
    def sort_annotations(
        cls,
        annotations: tuple[Annotation, ...],
    ) -> tuple[Annotation, ...]:
        """Сортирует аннотации по началу, затем по концу."""
        return tuple(sorted(annotations, key=lambda item: item.sort_key))

    def values(self) -> List[str]:
        """Возвращает значения аннотаций слоя в порядке времени."""
        return [annotation.value for annotation in self.annotations]


class MarkupDocument(ABCSchema):
    """Разобранный EAF файл: медиа ссылки и слои разметки."""

    media_descriptors: tuple[str, ...] = ()
    tiers: tuple[Tier, ...] = ()

    @field_validator("tiers")
    @classmethod
    def check_unique_names(cls, tiers: tuple[Tier, ...]) -> tuple[Tier, ...]:
        """Проверяет уникальность имен слоев."""
        names = [tier.name for tier in tiers]
        if len(names) != len(set(names)):
            raise ValueError("Tier names must be unique within a document.")
        return tiers

    def tier(self, name: str) -> Optional[Tier]:
        """Возвращает слой по имени.

        :param name: Имя слоя.
        :return: Слой или None, если слоя нет.
        """
        for tier in self.tiers:
            if tier.name == name:
                return tier
        return None
