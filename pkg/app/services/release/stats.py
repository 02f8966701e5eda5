from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import List, Sequence, Tuple

from core import settings
from core.exceptions import (
    AudioFormatError,
    FormatError,
    MetadataError,
    StatsError,
)
from infrastructure.formats import read_wav_info
from infrastructure.repositories.tables import (
    ConversationRepository,
    FragmentRepository,
    ParticipantRepository,
)
from infrastructure.schemas.release import CorpusStats, FragmentRow
from services.audio import parse_duration
from services.loggs import logg_error_data, logger


def mean_seconds(durations_ms: Sequence[int]) -> float:
    """Средняя длительность в секундах с округлением до десятых.

    Половина округляется вверх; пустой список дает 0.0.
    """
    if not durations_ms:
        return 0.0
    mean = Decimal(sum(durations_ms)) / Decimal(len(durations_ms)) / Decimal(1000)
    return float(mean.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def _row_duration(table: str, row: FragmentRow) -> int:
    """Длительность строки по ее началу и концу, со сверкой со столбцом.

    :raises StatsError: Время в строке не разбирается.
    """
    try:
        start = parse_duration(row.time_start)
        end = parse_duration(row.time_end)
        declared = parse_duration(row.duration)
    except FormatError as exc:
        raise StatsError(f"{table}: row {row.id}: {exc.message}") from exc
    duration = end - start
    if abs(declared - duration) > settings.RELEASE.DURATION_TOLERANCE_MS:
        logger.warning(
            "%s: у %s длительность %s мс, по границам %s мс",
            table,
            row.id,
            declared,
            duration,
        )
    return duration


def _check_clip(clip: Path, duration_ms: int) -> None:
    """Сверяет длительность файла фрагмента с таблицей."""
    if not clip.is_file():
        logger.warning("Файл фрагмента %s отсутствует", clip.name)
        return
    try:
        info = read_wav_info(clip.read_bytes())
    except AudioFormatError as e:
        logger.warning(msg=f"Файл {clip.name} не читается.", extra=logg_error_data(e))
        return
    clip_ms = info.frames * 1000 / info.sample_rate
    if abs(clip_ms - duration_ms) > settings.RELEASE.DURATION_TOLERANCE_MS:
        logger.warning(
            "Длительность файла %s %.3f мс, в таблице %s мс",
            clip.name,
            clip_ms,
            duration_ms,
        )


def _pairs(
    repository: FragmentRepository,
    clips_dir: Path,
) -> Tuple[int, List[int]]:
    """Число пар и длительности всех членов пар по таблице фрагментов.

    :raises StatsError: Таблица отсутствует или некорректна.
    """
    if not repository.exists():
        raise StatsError(f"{settings.RELEASE.MISSING_TABLE_MSG} ({repository.path})")
    try:
        rows = repository.load()
    except MetadataError as exc:
        raise StatsError(exc.message) from exc

    durations = []
    for row in rows:
        duration = _row_duration(repository.file_name, row)
        _check_clip(clips_dir / f"{row.id}.wav", duration)
        durations.append(duration)
    pairs = {frozenset((row.id, row.trans_id)) for row in rows}
    return len(pairs), durations


def compute_stats(release_dir: Path) -> CorpusStats:
    """Считает статистику собранного релиза.

    Участники считаются по разговорам релиза: различные id левых и
    правых участников, найденные в таблице участников.

    :param release_dir: Директория релиза.
    :raises StatsError: Таблица отсутствует или некорректна.
    :return: CorpusStats
    """
    release = settings.RELEASE
    try:
        conversations = ConversationRepository(release_dir).load()
        participants = ParticipantRepository(release_dir).load()
    except MetadataError as exc:
        logger.error(msg="Таблицы релиза не читаются.", extra=logg_error_data(exc))
        raise StatsError(exc.message) from exc

    known = {participant.id for participant in participants}
    speakers = {
        speaker
        for record in conversations
        for speaker in (record.participant_id_left, record.participant_id_right)
        if speaker in known
    }
    long_pairs, long_durations = _pairs(
        FragmentRepository.long(release_dir), release_dir / release.LONG_DIR
    )
    short_pairs, short_durations = _pairs(
        FragmentRepository.short(release_dir), release_dir / release.SHORT_DIR
    )
    stats = CorpusStats(
        conversations=len(conversations),
        participants=len(speakers),
        long_pairs=long_pairs,
        mean_long_duration_s=mean_seconds(long_durations),
        short_pairs=short_pairs,
        mean_short_duration_s=mean_seconds(short_durations),
    )
    logger.info("Статистика релиза: %s", stats.model_dump())
    return stats


def stats_rows(stats: CorpusStats) -> List[Tuple[str, str]]:
    """Статистика как пары (показатель, значение) для текста и CSV."""
    return [
        ("conversations", str(stats.conversations)),
        ("participants", str(stats.participants)),
        ("long_pairs", str(stats.long_pairs)),
        ("mean_long_duration_s", f"{stats.mean_long_duration_s:.1f}"),
        ("short_pairs", str(stats.short_pairs)),
        ("mean_short_duration_s", f"{stats.mean_short_duration_s:.1f}"),
    ]


def format_stats(stats: CorpusStats) -> str:
    """Текстовая сводка статистики в духе таблицы релиза."""
    return "\n".join(
        [
            f"Conversations          {stats.conversations:>6}",
            f"Participants           {stats.participants:>6}",
            f"Re-enactment pairs     {stats.long_pairs:>6}"
            f"  mean {stats.mean_long_duration_s:.1f} s",
            f"Phrase pairs           {stats.short_pairs:>6}"
            f"  mean {stats.mean_short_duration_s:.1f} s",
        ]
    )
