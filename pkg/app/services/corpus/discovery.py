from pathlib import Path
from typing import Dict, List, Optional

from core import settings
from core.exceptions import AudioFormatError, CorpusIoError, ParseError
from infrastructure.enums import AudioLayoutEnum
from infrastructure.formats import parse_eaf, read_wav_info
from infrastructure.schemas.corpus import ConversationFiles, ConversationRecord, Corpus
from infrastructure.schemas.markup import MarkupDocument
from services.loggs import logg_error_data, logger

from .metadata import load_metadata
from .naming import canonical_id


def _names(record: ConversationRecord) -> List[str]:
    """Имена, под которыми файлы разговора могут лежать на диске."""
    names = [record.id]
    canonical = canonical_id(record)
    if canonical != record.id:
        names.append(canonical)
    return names


def _first_file(paths: List[Path]) -> Optional[Path]:
    """Возвращает первый существующий файл из списка."""
    for path in paths:
        if path.is_file():
            return path
    return None


def _find_files(recordings_dir: Path, record: ConversationRecord) -> ConversationFiles:
    """Ищет разметку и аудио одного разговора.

    Разметка: `<ID>.eaf` или `<ID>/<ID>.eaf`. Аудио: стерео `<ID>.wav`
    или папка `<ID>/` с дорожками `<left>.wav` и `<right>.wav`, где
    left/right берутся из таблицы разговоров.

    :param recordings_dir: Директория записей.
    :param record: Строка таблицы разговоров.
    :return: ConversationFiles
    """
    markup_suffix = settings.CORPUS.MARKUP_SUFFIX
    audio_suffix = settings.CORPUS.AUDIO_SUFFIX
    names = _names(record)
    markup_path = _first_file(
        [recordings_dir / f"{name}{markup_suffix}" for name in names]
        + [recordings_dir / name / f"{name}{markup_suffix}" for name in names]
    )
    audio_path = _first_file(
        [recordings_dir / f"{name}{audio_suffix}" for name in names]
    )
    if audio_path is not None:
        return ConversationFiles(
            conversation=record.id,
            markup_path=markup_path,
            layout=AudioLayoutEnum.STEREO_SINGLE,
            audio_path=audio_path,
        )

    for name in names:
        folder = recordings_dir / name
        left = folder / f"{record.participant_id_left}{audio_suffix}"
        right = folder / f"{record.participant_id_right}{audio_suffix}"
        if left.is_file() and right.is_file() and left != right:
            return ConversationFiles(
                conversation=record.id,
                markup_path=markup_path,
                layout=AudioLayoutEnum.DUAL_MONO,
                left_track_path=left,
                right_track_path=right,
            )
    return ConversationFiles(conversation=record.id, markup_path=markup_path)


def _with_length(files: ConversationFiles) -> ConversationFiles:
    """Дополняет файлы разговора длиной записи из заголовков WAV.

    Для раздельных дорожек берется более длинная, как при сведении.
    Нечитаемый заголовок оставляет длину пустой: ошибку сообщит сборка.

    :param files: Найденные файлы разговора.
    :return: ConversationFiles
    """
    paths = [
        path
        for path in (files.audio_path, files.left_track_path, files.right_track_path)
        if path is not None
    ]
    if not paths:
        return files
    try:
        infos = [read_wav_info(path.read_bytes()) for path in paths]
    except (AudioFormatError, OSError) as e:
        logger.warning(
            msg=f"Длина записи {files.conversation} не прочитана.",
            extra=logg_error_data(e),
        )
        return files
    return files.model_copy(
        update={
            "frames": max(info.frames for info in infos),
            "sample_rate": infos[0].sample_rate,
        }
    )


def discover_corpus(recordings_dir: Path, metadata_dir: Path) -> Corpus:
    """Читает метаданные и находит файлы каждого разговора.

    Отсутствие файлов не является ошибкой: его сообщает валидация.

    :param recordings_dir: Директория записей.
    :param metadata_dir: Директория с таблицами метаданных.
    :raises CorpusIoError: Директория записей не читается.
    :raises MetadataError: Таблицы метаданных некорректны.
    :return: Corpus
    """
    if not recordings_dir.is_dir():
        logger.error("Директория записей не найдена: %s", recordings_dir)
        raise CorpusIoError(recordings_dir)
    try:
        next(recordings_dir.iterdir(), None)
    except OSError as exc:
        logger.error(msg="Директория записей недоступна.", extra=logg_error_data(exc))
        raise CorpusIoError(recordings_dir) from exc

    metadata = load_metadata(metadata_dir)
    files = {
        record.id: _with_length(_find_files(recordings_dir, record))
        for record in metadata.conversations
    }
    logger.info(
        "Корпус найден: разговоров %s, с разметкой %s, с аудио %s",
        len(files),
        sum(item.has_markup for item in files.values()),
        sum(item.has_audio for item in files.values()),
    )
    return Corpus(
        participants=tuple(metadata.participants),
        producers=tuple(metadata.producers),
        conversations=tuple(metadata.conversations),
        recordings_dir=recordings_dir,
        files=files,
    )


def load_markups(corpus: Corpus) -> Dict[str, MarkupDocument]:
    """Разбирает найденные файлы разметки.

    Файл, который не удалось разобрать, пропускается с ошибкой в логе;
    валидация сообщит о нем как об отсутствующей разметке.

    :param corpus: Корпус.
    :return: Словарь id разговора -> документ разметки.
    """
    markups: Dict[str, MarkupDocument] = {}
    for record in corpus.conversations:
        path = corpus.files_for(record).markup_path
        if path is None:
            continue
        try:
            markups[record.id] = parse_eaf(path.read_bytes())
        except (ParseError, OSError) as e:
            logger.error(
                msg=f"Разметка {path.name} не разобрана.",
                extra=logg_error_data(e),
            )
    return markups
