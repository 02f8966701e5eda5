from typing import List, Optional, Sequence, Tuple

import numpy as np

from core import settings
from infrastructure.enums import AudioLayoutEnum, OgReEnum, TierNameEnum
from infrastructure.schemas.corpus import Participant, Producer
from infrastructure.schemas.testkit import (
    AnnotationPlan,
    AudioPlan,
    ConversationPlan,
    FixtureSpec,
)
from services.loggs import logger

LANGUAGES = ("en", "es", "ja", "bn", "fr", "de", "pt", "hi")
TIERS = tuple(tier.value for tier in TierNameEnum)
MAX_VALUE = 99
START_MS = 500
GAP_MS = (0, 1000)
LENGTH_MS = (300, 4000)

# (Utterance, LittleLeft, LittleRight)
TierCounts = Tuple[int, int, int]


def _layout(
    rng: np.random.Generator,
    tier: str,
    values: Sequence[str],
) -> List[AnnotationPlan]:
    """Раскладывает значения слоя подряд со случайными паузами."""
    plans = []
    cursor = START_MS
    for value in values:
        start = cursor + int(rng.integers(*GAP_MS, endpoint=True))
        end = start + int(rng.integers(*LENGTH_MS, endpoint=True))
        plans.append(AnnotationPlan(tier=tier, value=value, start_ms=start, end_ms=end))
        cursor = end
    return plans


def _values(rng: np.random.Generator, count: int, dotted: bool) -> List[str]:
    """Различные значения разметки в случайном порядке."""
    numbers = rng.choice(np.arange(1, MAX_VALUE + 1), size=count, replace=False)
    values = []
    for number in numbers:
        value = str(int(number))
        if dotted and rng.random() < 0.5:
            value = f"{value}.{int(rng.integers(1, 100))}"
        values.append(value)
    return values


def _marked(rng: np.random.Generator, value: str) -> str:
    """Значение с ведущим `#` или без него."""
    return f"#{value}" if rng.random() < 0.5 else value


def _end_ms(annotations: Sequence[AnnotationPlan]) -> int:
    return max((item.end_ms for item in annotations), default=START_MS)


def _delete_span(rng: np.random.Generator, end_ms: int) -> AnnotationPlan:
    """Директива удаления в случайном месте разговора."""
    start = int(rng.integers(0, end_ms))
    length = int(rng.integers(*LENGTH_MS, endpoint=True))
    return AnnotationPlan(
        tier=TierNameEnum.UTTERANCE.value,
        value=settings.CORPUS.DELETE_DIRECTIVE,
        start_ms=start,
        end_ms=start + length,
    )


def _noise(
    rng: np.random.Generator,
    annotations: List[AnnotationPlan],
) -> List[AnnotationPlan]:
    """Случайные дубликаты, лишние и неверные значения разметки."""
    extra = []
    end_ms = _end_ms(annotations)
    for tier in TIERS:
        existing = [item for item in annotations if item.tier == tier]
        if existing and rng.random() < 0.2:
            source = existing[int(rng.integers(len(existing)))]
            value = _marked(rng, source.value.lstrip("#"))
            extra.append(source.model_copy(update={"value": value}))
        if rng.random() < 0.2:
            value = str(int(rng.integers(MAX_VALUE + 1, 2 * MAX_VALUE)))
            extra.extend(_layout(rng, tier, [value]))
        if rng.random() < 0.1:
            start = int(rng.integers(0, end_ms))
            extra.append(
                AnnotationPlan(
                    tier=tier,
                    value=f"x{int(rng.integers(1, 10))}",
                    start_ms=start,
                    end_ms=start + LENGTH_MS[0],
                )
            )
    return annotations + extra


def _conversation(
    rng: np.random.Generator,
    conversation_id: str,
    code: OgReEnum,
    speakers: Tuple[int, int],
    tier_values: Sequence[Sequence[str]],
    redactions: bool,
    messy: bool,
    layout: AudioLayoutEnum,
) -> ConversationPlan:
    """Разговор пары с собственной случайной раскладкой значений."""
    annotations: List[AnnotationPlan] = []
    for tier, values in zip(TIERS, tier_values):
        order = [values[int(i)] for i in rng.permutation(len(values))]
        annotations.extend(_layout(rng, tier, [_marked(rng, v) for v in order]))
    if messy:
        annotations = _noise(rng, annotations)
    if redactions and rng.random() < 0.5:
        annotations.append(_delete_span(rng, _end_ms(annotations)))
    duration_ms = _end_ms(annotations) + settings.TESTKIT.TAIL_MS
    return ConversationPlan(
        id=conversation_id,
        original_or_reenacted=code.value,
        participant_id_left=speakers[0],
        participant_id_right=speakers[1],
        annotations=tuple(annotations),
        audio=AudioPlan(duration_ms=duration_ms, layout=layout),
    )


def random_spec(
    seed: int,
    counts: Optional[Sequence[TierCounts]] = None,
    max_annotations: int = 20,
    dotted: bool = False,
    redactions: bool = False,
    messy: bool = False,
    dual_mono: bool = False,
) -> FixtureSpec:
    """Случайный синтетический корпус из пар оригинал/воспроизведение.

    Без `messy` корпус чистый: каждое значение встречается ровно один
    раз в слое каждого разговора пары. Директивы удаления не нарушают
    чистоту корпуса, но исключают пересекающиеся с ними фрагменты.

    :param seed: Зерно генератора.
    :param counts: Число значений (Utterance, LittleLeft, LittleRight)
        для каждой пары; по умолчанию от одной до трех случайных пар.
    :param max_annotations: Наибольшее число значений в слое.
    :param dotted: Разрешить значения с точкой (`3.34`).
    :param redactions: Добавлять директивы удаления.
    :param messy: Добавлять дубликаты, лишние и неверные значения.
    :param dual_mono: Писать аудио отдельными дорожками участников.
    :return: FixtureSpec
    """
    rng = np.random.default_rng(seed)
    if counts is None:
        counts = [
            (
                int(rng.integers(1, max_annotations, endpoint=True)),
                int(rng.integers(0, max_annotations, endpoint=True)),
                int(rng.integers(0, max_annotations, endpoint=True)),
            )
            for _ in range(int(rng.integers(1, 3, endpoint=True)))
        ]
    layout = AudioLayoutEnum.DUAL_MONO if dual_mono else AudioLayoutEnum.STEREO_SINGLE

    participants: List[Participant] = []
    conversations: List[ConversationPlan] = []
    numbers = rng.choice(np.arange(1, 1000), size=len(counts), replace=False)
    for index, (tier_counts, number) in enumerate(zip(counts, numbers)):
        og_lang, re_lang = rng.choice(LANGUAGES, size=2, replace=False)
        speakers = (2 * index + 1, 2 * index + 2)
        participants.extend(
            Participant(
                id=speaker,
                lang1=str(og_lang),
                lang2=str(re_lang),
                lang_strength=int(rng.integers(1, 5, endpoint=True)),
            )
            for speaker in speakers
        )
        tier_values = [_values(rng, count, dotted) for count in tier_counts]
        for lang, code in ((og_lang, OgReEnum.ORIGINAL), (re_lang, OgReEnum.REENACTED)):
            conversations.append(
                _conversation(
                    rng,
                    f"{str(lang).upper()}_{int(number):03d}",
                    code,
                    speakers,
                    tier_values,
                    redactions,
                    messy,
                    layout,
                )
            )
    spec = FixtureSpec(
        seed=seed,
        participants=tuple(participants),
        producers=(Producer(id=1, name="Operator"),),
        conversations=tuple(conversations),
    )
    logger.debug("Спецификация %s: разговоров %s", seed, len(conversations))
    return spec
