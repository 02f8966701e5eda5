from pathlib import Path

from core.exceptions import CorpusIoError
from infrastructure.enums import AudioLayoutEnum
from infrastructure.formats import read_wav_file
from infrastructure.schemas.audio import WavBuffer
from infrastructure.schemas.corpus import ConversationFiles

from .editing import merge_tracks


def load_conversation_audio(files: ConversationFiles) -> WavBuffer:
    """Читает запись разговора как стерео буфер.

    Раскладка DUAL_MONO собирается из дорожек левого и правого
    участника.

    :param files: Найденные файлы разговора.
    :raises CorpusIoError: Аудио разговора не найдено.
    :raises AudioFormatError: Файл не является поддерживаемым WAV.
    :return: WavBuffer
    """
    if files.layout is AudioLayoutEnum.STEREO_SINGLE and files.audio_path:
        return read_wav_file(files.audio_path)
    if (
        files.layout is AudioLayoutEnum.DUAL_MONO
        and files.left_track_path
        and files.right_track_path
    ):
        return merge_tracks(
            read_wav_file(files.left_track_path),
            read_wav_file(files.right_track_path),
        )
    raise CorpusIoError(Path(files.conversation), "Conversation audio is missing.")
