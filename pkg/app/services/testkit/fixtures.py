from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np

from core import settings
from infrastructure.enums import AudioLayoutEnum
from infrastructure.formats import serialize_eaf, write_wav_file
from infrastructure.schemas.audio import WavBuffer
from infrastructure.schemas.corpus import ConversationFiles, ConversationRecord, Corpus
from infrastructure.schemas.markup import Annotation, MarkupDocument, Tier
from infrastructure.schemas.testkit import AudioPlan, ConversationPlan, FixtureSpec
from services.audio import ms_to_sample
from services.corpus import write_metadata
from services.loggs import logger


def tone(frequency_hz: float, frames: int, sample_rate: int) -> np.ndarray:
    """Синусоида int16 с амплитудой из настроек."""
    time = np.arange(frames) / sample_rate
    wave = settings.TESTKIT.AMPLITUDE * np.sin(2 * np.pi * frequency_hz * time)
    return np.round(wave).astype(np.int16)


def render_audio(audio: AudioPlan, sample_rate: int) -> WavBuffer:
    """Стерео запись плана: левый и правый тон."""
    frames = ms_to_sample(audio.duration_ms, sample_rate)
    samples = np.column_stack(
        [
            tone(audio.left_hz, frames, sample_rate),
            tone(audio.right_hz, frames, sample_rate),
        ]
    )
    return WavBuffer(sample_rate=sample_rate, channels=2, samples=samples)


def markup_document(plan: ConversationPlan) -> MarkupDocument:
    """Разметка разговора; слои идут в порядке первого упоминания."""
    tiers: Dict[str, List[Annotation]] = {}
    for item in plan.annotations:
        tiers.setdefault(item.tier, []).append(
            Annotation(value=item.value, start_ms=item.start_ms, end_ms=item.end_ms)
        )
    return MarkupDocument(
        media_descriptors=(f"{plan.id}{settings.CORPUS.AUDIO_SUFFIX}",),
        tiers=tuple(
            Tier(name=name, annotations=tuple(annotations))
            for name, annotations in tiers.items()
        ),
    )


def conversation_record(plan: ConversationPlan) -> ConversationRecord:
    """Строка таблицы разговоров; trans_id не заполняется."""
    return ConversationRecord(
        id=plan.id,
        date=plan.date,
        original_or_reenacted=plan.original_or_reenacted,
        participant_id_left=plan.participant_id_left,
        participant_id_right=plan.participant_id_right,
        producer_id=plan.producer_id,
    )


def _dual_mono(plan: ConversationPlan) -> bool:
    return plan.audio is not None and plan.audio.layout is AudioLayoutEnum.DUAL_MONO


def _write_conversation(
    plan: ConversationPlan,
    sample_rate: int,
    recordings_dir: Path,
) -> None:
    """Пишет разметку и аудио одного разговора."""
    corpus = settings.CORPUS
    folder = recordings_dir / plan.id if _dual_mono(plan) else recordings_dir
    if plan.has_markup:
        folder.mkdir(parents=True, exist_ok=True)
        eaf = serialize_eaf(markup_document(plan))
        (folder / f"{plan.id}{corpus.MARKUP_SUFFIX}").write_bytes(eaf)
    if plan.audio is None:
        return
    stereo = render_audio(plan.audio, sample_rate)
    if not _dual_mono(plan):
        write_wav_file(folder / f"{plan.id}{corpus.AUDIO_SUFFIX}", stereo)
        return
    for speaker, channel in (
        (plan.participant_id_left, 0),
        (plan.participant_id_right, 1),
    ):
        track = WavBuffer(
            sample_rate=sample_rate,
            channels=1,
            samples=stereo.samples[:, channel : channel + 1],
        )
        write_wav_file(folder / f"{speaker}{corpus.AUDIO_SUFFIX}", track)


def make_fixture(spec: FixtureSpec, directory: Path) -> Path:
    """Пишет синтетический корпус на диск.

    В `directory` появляются таблицы метаданных и `recordings/` с
    разметкой и тоновыми записями: левый канал 440 Гц, правый 660 Гц,
    16 бит. При раздельных дорожках разметка и дорожки участников
    лежат в папке разговора. Результат определяется спецификацией.

    :param spec: Спецификация корпуса.
    :param directory: Входная директория корпуса.
    :return: Путь к директории.
    """
    recordings_dir = directory / settings.CORPUS.RECORDINGS_DIR
    recordings_dir.mkdir(parents=True, exist_ok=True)
    for plan in spec.conversations:
        _write_conversation(plan, spec.sample_rate, recordings_dir)
    write_metadata(
        directory,
        spec.participants,
        spec.producers,
        [conversation_record(plan) for plan in spec.conversations],
    )
    logger.debug("Корпус %s записан в %s", spec.seed, directory)
    return directory


def corpus_from_spec(
    spec: FixtureSpec,
    recordings_dir: Path = Path(settings.CORPUS.RECORDINGS_DIR),
) -> Tuple[Corpus, Dict[str, MarkupDocument]]:
    """Корпус и разметка спецификации без записи на диск.

    Пути файлов указывают туда, куда их записал бы `make_fixture`.

    :param spec: Спецификация корпуса.
    :param recordings_dir: Директория записей для путей файлов.
    :return: Корпус и разметка по id разговора.
    """
    corpus = settings.CORPUS
    files: Dict[str, ConversationFiles] = {}
    markups: Dict[str, MarkupDocument] = {}
    for plan in spec.conversations:
        folder = recordings_dir / plan.id if _dual_mono(plan) else recordings_dir
        markup_path = None
        if plan.has_markup:
            markup_path = folder / f"{plan.id}{corpus.MARKUP_SUFFIX}"
            markups[plan.id] = markup_document(plan)
        layout = None if plan.audio is None else plan.audio.layout
        audio_path = None
        if layout is AudioLayoutEnum.STEREO_SINGLE:
            audio_path = folder / f"{plan.id}{corpus.AUDIO_SUFFIX}"
        left = right = None
        if layout is AudioLayoutEnum.DUAL_MONO:
            left = folder / f"{plan.participant_id_left}{corpus.AUDIO_SUFFIX}"
            right = folder / f"{plan.participant_id_right}{corpus.AUDIO_SUFFIX}"
        frames = None
        if plan.audio is not None:
            frames = ms_to_sample(plan.audio.duration_ms, spec.sample_rate)
        files[plan.id] = ConversationFiles(
            conversation=plan.id,
            markup_path=markup_path,
            layout=layout,
            audio_path=audio_path,
            left_track_path=left,
            right_track_path=right,
            frames=frames,
            sample_rate=None if frames is None else spec.sample_rate,
        )
    return (
        Corpus(
            participants=spec.participants,
            producers=spec.producers,
            conversations=tuple(
                conversation_record(plan) for plan in spec.conversations
            ),
            recordings_dir=recordings_dir,
            files=files,
        ),
        markups,
    )
