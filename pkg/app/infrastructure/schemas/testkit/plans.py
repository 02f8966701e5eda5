from typing import Optional

from pydantic import Field, model_validator

from core import settings

from ...enums import AudioLayoutEnum
from ..abc import ABCSchema
from ..corpus import Participant, Producer
from ..release import CorpusStats


class AnnotationPlan(ABCSchema):
    """Аннотация синтетической разметки.

    Слой и значение хранятся текстом, чтобы в план можно было внести
    неверный слой или неверное значение.
    """

    tier: str
    value: str
    start_ms: int = Field(..., ge=0)
    end_ms: int

    @model_validator(mode="after")
    def check_span(self) -> "AnnotationPlan":
        if self.start_ms >= self.end_ms:
            raise ValueError("Annotation plan must start before it ends.")
        return self


class AudioPlan(ABCSchema):
    """Тоновая запись разговора: тон на канал участника."""

    duration_ms: int = Field(..., gt=0)
    left_hz: float = settings.TESTKIT.LEFT_TONE_HZ
    right_hz: float = settings.TESTKIT.RIGHT_TONE_HZ
    layout: AudioLayoutEnum = AudioLayoutEnum.STEREO_SINGLE


class ConversationPlan(ABCSchema):
    """Разговор синтетического корпуса.

    Поля `id` и `original_or_reenacted` попадают в таблицу как есть.
    """

    id: str
    original_or_reenacted: str
    participant_id_left: int
    participant_id_right: int
    producer_id: int = 1
    date: str = settings.TESTKIT.SESSION_DATE
    annotations: tuple[AnnotationPlan, ...] = ()
    audio: Optional[AudioPlan] = None
    has_markup: bool = True


class FixtureSpec(ABCSchema):
    """Синтетический корпус: метаданные, разметка и аудио."""

    seed: int = 0
    sample_rate: int = Field(settings.TESTKIT.SAMPLE_RATE, gt=0)
    participants: tuple[Participant, ...] = ()
    producers: tuple[Producer, ...] = ()
    conversations: tuple[ConversationPlan, ...] = ()

    def replace(self, plan: ConversationPlan, new: ConversationPlan) -> "FixtureSpec":
        """Копия спецификации с замененным разговором.

        :param plan: Заменяемый разговор.
        :param new: Новый разговор.
        :return: FixtureSpec
        """
        conversations = tuple(
            new if item is plan else item for item in self.conversations
        )
        return self.model_copy(update={"conversations": conversations})


class OracleResult(ABCSchema):
    """Ожидаемый результат сборки по спецификации.

    `pairs` - пары имен фрагментов (оригинал, воспроизведение),
    `excluded` - исходные id исключенных разговоров.
    """

    pairs: frozenset[tuple[str, str]] = frozenset()
    conversations: tuple[str, ...] = ()
    excluded: frozenset[str] = frozenset()
    stats: CorpusStats = CorpusStats()
