import json
import shutil
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from core import settings
from core.exceptions import CorpusToolError, ReleaseError, StrictModeError
from infrastructure.enums import FragmentKindEnum, SideEnum
from infrastructure.formats import write_wav_file
from infrastructure.repositories.tables import FragmentRepository
from infrastructure.schemas.audio import TimeRange, WavBuffer
from infrastructure.schemas.corpus import ConversationRecord, Corpus
from infrastructure.schemas.markup import MarkupDocument
from infrastructure.schemas.pairing import ConversationPair, Fragment, RedactionSpan
from infrastructure.schemas.release import FragmentRow, ReleaseConfig, ReleaseManifest
from infrastructure.schemas.validation import ValidationReport
from services.audio import (
    concat,
    cut,
    extract_channel,
    format_duration,
    load_conversation_audio,
    silence,
    silence_from,
)
from services.corpus import canonical_id, discover_corpus, load_markups, write_metadata
from services.loggs import logg_error_data, logger
from services.pairing import fragment_name, plan_pairs
from services.validation import print_report, validate_corpus, write_report

RECORDINGS = "recordings"
LONG_CLIPS = "fragments_long"
SHORT_CLIPS = "fragments_short"
CONCATENATIONS = "fragments_short_concat"
MARKUPS = "markup"
FRAGMENT_TABLES = "fragment_tables"
OUTPUT_CLASSES = (
    RECORDINGS,
    LONG_CLIPS,
    SHORT_CLIPS,
    CONCATENATIONS,
    MARKUPS,
    FRAGMENT_TABLES,
)

Member = Tuple[Fragment, Fragment]


class JobResult(NamedTuple):
    """Результат обработки одной пары разговоров."""

    long_rows: List[FragmentRow]
    short_rows: List[FragmentRow]
    counts: Counter[str]


def _check_output(output_dir: Path) -> None:
    """Проверяет, что выходная директория отсутствует или пуста.

    :raises ReleaseError: Директория не пуста или является файлом.
    """
    if not output_dir.exists():
        return
    if not output_dir.is_dir() or next(output_dir.iterdir(), None) is not None:
        raise ReleaseError(f"{settings.RELEASE.OUTPUT_NOT_EMPTY_MSG} ({output_dir})")


def redact(buf: WavBuffer, spans: Iterable[RedactionSpan]) -> WavBuffer:
    """Заглушает интервалы удаления в записи.

    Интервал, выходящий за конец записи, заглушается до последнего кадра.

    :param buf: Запись разговора.
    :param spans: Интервалы удаления этого разговора.
    :return: WavBuffer
    """
    for span in spans:
        if span.end_ms >= buf.duration_ms:
            buf = silence_from(buf, span.start_ms)
        else:
            buf = silence(buf, TimeRange(start_ms=span.start_ms, end_ms=span.end_ms))
    return buf


def fragment_row(own: Fragment, other: Fragment) -> FragmentRow:
    """Строка таблицы фрагментов для члена пары.

    :param own: Фрагмент.
    :param other: Его пара в разговоре перевода.
    :return: FragmentRow
    """
    return FragmentRow(
        id=fragment_name(own),
        time_start=format_duration(own.start_ms),
        time_end=format_duration(own.end_ms),
        duration=format_duration(own.duration_ms),
        conv_id=own.conv_id.canonical,
        trans_id=fragment_name(other),
    )


def _build_conversation(
    record: ConversationRecord,
    members: List[Member],
    redactions: Iterable[RedactionSpan],
    corpus: Corpus,
    output_dir: Path,
    result: JobResult,
) -> None:
    """Записывает запись, разметку и фрагменты одного разговора.

    :param record: Разговор.
    :param members: Пары (фрагмент разговора, фрагмент перевода).
    :param redactions: Интервалы удаления всех разговоров пары.
    :param corpus: Корпус.
    :param output_dir: Директория релиза.
    :param result: Накопитель строк таблиц и счетчиков.
    """
    release = settings.RELEASE
    name = canonical_id(record)
    files = corpus.files_for(record)
    spans = [span for span in redactions if span.conv_id.canonical == name]
    audio = redact(load_conversation_audio(files), spans)
    write_wav_file(output_dir / release.RECORDINGS_DIR / f"{name}.wav", audio)
    result.counts[RECORDINGS] += 1

    if files.markup_path is not None:
        markup_dir = output_dir / release.MARKUP_DIR
        markup_dir.mkdir(parents=True, exist_ok=True)
        (markup_dir / f"{name}.eaf").write_bytes(files.markup_path.read_bytes())
        result.counts[MARKUPS] += 1

    by_side: Dict[SideEnum, List[WavBuffer]] = {SideEnum.LEFT: [], SideEnum.RIGHT: []}
    for own, other in sorted(members, key=lambda member: member[0].start_ms):
        clip = cut(audio, TimeRange(start_ms=own.start_ms, end_ms=own.end_ms))
        clip_name = f"{fragment_name(own)}.wav"
        if own.kind is FragmentKindEnum.LONG:
            write_wav_file(output_dir / release.LONG_DIR / clip_name, clip)
            result.long_rows.append(fragment_row(own, other))
            result.counts[LONG_CLIPS] += 1
            continue
        mono = extract_channel(clip, own.side)
        write_wav_file(output_dir / release.SHORT_DIR / clip_name, mono)
        by_side[own.side].append(mono)
        result.short_rows.append(fragment_row(own, other))
        result.counts[SHORT_CLIPS] += 1

    for side, clips in by_side.items():
        if not clips:
            continue
        concat_path = output_dir / release.CONCAT_DIR / f"{name}_{side.value}.wav"
        write_wav_file(concat_path, concat(clips))
        result.counts[CONCATENATIONS] += 1


def build_pair(plan: ConversationPair, corpus: Corpus, output_dir: Path) -> JobResult:
    """Собирает файлы релиза для пары разговоров.

    Все файлы задачи имеют имена, производные от id ее разговоров,
    поэтому задачи можно выполнять параллельно.

    :param plan: Пара разговоров с парами фрагментов.
    :param corpus: Корпус.
    :param output_dir: Директория релиза.
    :return: JobResult
    """
    logger.debug("Сборка пары %s / %s", plan.og.id, plan.re.id)
    result = JobResult([], [], Counter())
    og_members = [(pair.og, pair.re) for pair in plan.pairs]
    re_members = [(pair.re, pair.og) for pair in plan.pairs]
    _build_conversation(
        plan.og, og_members, plan.redactions, corpus, output_dir, result
    )
    _build_conversation(
        plan.re, re_members, plan.redactions, corpus, output_dir, result
    )
    logger.debug("Пара %s / %s собрана", plan.og.id, plan.re.id)
    return result


def _run_jobs(
    plans: List[ConversationPair],
    corpus: Corpus,
    cfg: ReleaseConfig,
) -> List[JobResult]:
    """Выполняет задачи пар разговоров в пуле потоков.

    :raises ReleaseError: Задача завершилась ошибкой.
    :return: Результаты в порядке пар.
    """
    results: List[JobResult] = []
    with ThreadPoolExecutor(cfg.workers) as executor:
        futures = [
            executor.submit(build_pair, plan, corpus, cfg.output_dir) for plan in plans
        ]
        for plan, future in zip(plans, futures):
            try:
                results.append(future.result())
            except (CorpusToolError, OSError) as e:
                logger.error(
                    msg=f"Пара {plan.og.id} / {plan.re.id} не собрана.",
                    extra=logg_error_data(e),
                )
                raise ReleaseError(
                    f"Conversation pair {plan.og.id} / {plan.re.id} failed: {e}"
                ) from e
    return results


def write_manifest(manifest: ReleaseManifest, output_dir: Path) -> None:
    """Записывает manifest.json без меток времени."""
    text = json.dumps(
        manifest.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False
    )
    path = output_dir / settings.RELEASE.MANIFEST_FILE
    path.write_text(text + "\n", encoding="utf-8")


class CheckedInput(NamedTuple):
    """Корпус, его разметка и результат валидации."""

    corpus: Corpus
    markups: Dict[str, MarkupDocument]
    report: ValidationReport


def validate_input(input_dir: Path, report_path: Optional[Path] = None) -> CheckedInput:
    """Находит корпус во входной директории и проверяет его.

    Отчет печатается в stderr и, если задан путь, пишется в CSV.

    :param input_dir: Директория с `recordings/` и таблицами метаданных.
    :param report_path: Путь к машиночитаемому отчету.
    :raises CorpusIoError: Директория записей не читается.
    :raises MetadataError: Таблицы метаданных некорректны.
    :return: CheckedInput
    """
    recordings_dir = input_dir / settings.CORPUS.RECORDINGS_DIR
    corpus = discover_corpus(recordings_dir, input_dir)
    markups = load_markups(corpus)
    report = validate_corpus(corpus, markups)
    print_report(report)
    if report_path is not None:
        write_report(report, report_path)
    return CheckedInput(corpus, markups, report)


def _discard_output(output_dir: Path, existed: bool) -> None:
    """Удаляет частично собранный релиз.

    Директория, которая была пустой до сборки, остается пустой.

    :param output_dir: Директория релиза.
    :param existed: Директория существовала до сборки.
    """
    shutil.rmtree(output_dir, ignore_errors=True)
    if existed:
        output_dir.mkdir(parents=True, exist_ok=True)
    logger.info("Частично собранный релиз удален: %s", output_dir)


def _write_release(
    plans: List[ConversationPair],
    results: List[JobResult],
    corpus: Corpus,
    report: ValidationReport,
    output_dir: Path,
) -> ReleaseManifest:
    """Пишет таблицы фрагментов, метаданные и манифест релиза."""
    counts: Counter[str] = Counter()
    long_rows: List[FragmentRow] = []
    short_rows: List[FragmentRow] = []
    for result in results:
        counts.update(result.counts)
        long_rows.extend(result.long_rows)
        short_rows.extend(result.short_rows)
    FragmentRepository.long(output_dir).dump(sorted(long_rows, key=lambda r: r.id))
    FragmentRepository.short(output_dir).dump(sorted(short_rows, key=lambda r: r.id))
    counts[FRAGMENT_TABLES] += 2

    included = [record for plan in plans for record in (plan.og, plan.re)]
    write_metadata(
        output_dir,
        corpus.participants,
        corpus.producers,
        [
            record.model_copy(update={"id": canonical_id(record)})
            for record in included
        ],
    )

    manifest = ReleaseManifest(
        conversations=tuple(sorted(canonical_id(record) for record in included)),
        excluded_conversations=tuple(sorted(report.excluded_conversations)),
        counts={key: counts[key] for key in OUTPUT_CLASSES},
        diagnostics=report.counts(),
        redaction_mode=settings.RELEASE.REDACTION_MODE,
    )
    write_manifest(manifest, output_dir)
    return manifest


def build_release(cfg: ReleaseConfig) -> ReleaseManifest:
    """Собирает релиз корпуса.

    Валидирует вход, сопоставляет фрагменты, режет и склеивает аудио,
    заглушает интервалы удаления и пишет таблицы. Таблицы сортируются
    по id, поэтому повторная сборка дает побайтно тот же результат.
    Если сборка прервана ошибкой, выходная директория остается в том
    виде, в каком была до сборки.

    :param cfg: Параметры сборки.
    :raises ReleaseError: Выходная директория не пуста или задача
        завершилась ошибкой.
    :raises StrictModeError: В строгом режиме найдены диагностики;
        выходная директория не создается.
    :raises CorpusIoError: Директория записей не читается.
    :raises MetadataError: Таблицы метаданных некорректны.
    :return: ReleaseManifest
    """
    _check_output(cfg.output_dir)
    corpus, markups, report = validate_input(cfg.input_dir, cfg.report_path)
    if cfg.strict and not report.is_clean:
        exc = StrictModeError(len(report.diagnostics))
        logger.error(
            msg="Сборка остановлена в строгом режиме.", extra=logg_error_data(exc)
        )
        raise exc

    plans = plan_pairs(corpus, markups, report)
    output_dir = cfg.output_dir
    existed = output_dir.exists()
    output_dir.mkdir(parents=True, exist_ok=True)
    logger.info("Сборка релиза в %s: пар разговоров %s", output_dir, len(plans))
    try:
        results = _run_jobs(plans, corpus, cfg)
        manifest = _write_release(plans, results, corpus, report, output_dir)
    except (CorpusToolError, OSError):
        _discard_output(output_dir, existed)
        raise
    logger.info(
        "Релиз собран: %s",
        ", ".join(f"{key} {value}" for key, value in manifest.counts.items()),
    )
    return manifest
