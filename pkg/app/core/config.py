from logging import DEBUG, ERROR, INFO, WARNING
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class LoggingSettings(BaseSettings):
    """Класс настроек логирования.

    Этот класс используется для хранения и управления настройками логирования
    приложения. Он наследуется от `BaseSettings`, что позволяет загружать
    настройки из переменных окружения.
    """

    model_config = SettingsConfigDict(extra="ignore", env_prefix="LOGGING_")
    LOGGER_NAME: str = "corpusLogger"
    REPORT_LOGGER_NAME: str = "reportLogger"
    LEVEL: str = "INFO"
    INTERVAL: int = 1
    BACKUP_COUNT: int = 30
    ENCODING: str = "utf-8"
    DISABLE_STREAM: bool = False
    FILE_ENABLED: bool = False

    @property
    def log_path(self) -> str:
        """Возвращает путь к директории для хранения логов.

        Директория создается, если она не существует.

        :return: Путь к директории для логов.
        """
        log_dir: Path = Path(__file__).parent.parent / "logs"
        log_dir.mkdir(parents=True, exist_ok=True)
        return str(log_dir)

    @property
    def log_level(self) -> int:
        """Возвращает уровень логирования в виде целого числа.
        Если заданный уровень не поддерживается, возвращает уровень INFO.

        :return: Уровень логирования.
        """
        levels = {
            "DEBUG": DEBUG,
            "INFO": INFO,
            "WARNING": WARNING,
            "ERROR": ERROR,
        }
        level = levels.get(self.LEVEL.upper())
        if not level:
            return INFO
        return level


class CorpusSettings(BaseSettings):
    """Класс настроек входного корпуса.

    Имена файлов метаданных, суффиксы файлов записей и директива
    удаления фрагментов.
    """

    model_config = SettingsConfigDict(extra="ignore", env_prefix="CORPUS_")
    RECORDINGS_DIR: str = "recordings"
    PARTICIPANT_FILE: str = "participant.csv"
    PRODUCER_FILE: str = "producer.csv"
    CONVERSATION_FILE: str = "conversation.csv"
    MARKUP_SUFFIX: str = ".eaf"
    AUDIO_SUFFIX: str = ".wav"
    CSV_ENCODING: str = "utf-8"
    DELETE_DIRECTIVE: str = "DELETE"
    NO_TRANSLATION_MSG: str = "Conversation has no translation."
    AMBIGUOUS_TRANSLATION_MSG: str = "Conversation has multiple translations."
    UNREADABLE_DIR_MSG: str = "Directory cannot be read."


class AudioSettings(BaseSettings):
    """Класс настроек обработки аудио."""

    model_config = SettingsConfigDict(extra="ignore", env_prefix="AUDIO_")
    BITS_PER_SAMPLE: int = 16
    RANGE_MSG: str = "Time range exceeds the buffer duration."
    CHANNEL_MSG: str = "Channel extraction needs a stereo buffer."
    CONCAT_MSG: str = "Buffers differ in sample rate or channel count."


class ReleaseSettings(BaseSettings):
    """Класс настроек сборки релиза.

    Структура выходной директории, число параллельных задач и
    сообщения об ошибках по умолчанию.
    """

    model_config = SettingsConfigDict(extra="ignore", env_prefix="RELEASE_")
    RECORDINGS_DIR: str = "recordings"
    LONG_DIR: str = "fragments-long"
    SHORT_DIR: str = "fragments-short"
    CONCAT_DIR: str = "fragments-short-concat"
    MARKUP_DIR: str = "markup"
    LONG_TABLE: str = "fragments-long.csv"
    SHORT_TABLE: str = "fragments-short.csv"
    MANIFEST_FILE: str = "manifest.json"
    WORKERS: int = 4
    DURATION_TOLERANCE_MS: int = 1
    REDACTION_MODE: str = "silence"
    STRICT_MODE_MSG: str = "Diagnostics found in strict mode, release not written."
    OUTPUT_NOT_EMPTY_MSG: str = "Output directory is not empty."
    SAME_DIRS_MSG: str = "Input and output directories must differ."
    MISSING_TABLE_MSG: str = "Release table is missing."


class TestkitSettings(BaseSettings):
    """Класс настроек генератора синтетических корпусов."""

    model_config = SettingsConfigDict(extra="ignore", env_prefix="TESTKIT_")
    SAMPLE_RATE: int = 44100
    LEFT_TONE_HZ: float = 440.0
    RIGHT_TONE_HZ: float = 660.0
    AMPLITUDE: int = 8000
    SESSION_DATE: str = "05_11_2022"
    TAIL_MS: int = 1000


class AppSettings(BaseSettings):
    """Класс настроек приложения."""

    model_config = SettingsConfigDict(extra="ignore", env_prefix="APP_")
    LOGGING: LoggingSettings = LoggingSettings()
    CORPUS: CorpusSettings = CorpusSettings()
    AUDIO: AudioSettings = AudioSettings()
    RELEASE: ReleaseSettings = ReleaseSettings()
    TESTKIT: TestkitSettings = TestkitSettings()
    PROG_NAME: str = "reenact-corpus"


settings = AppSettings()
