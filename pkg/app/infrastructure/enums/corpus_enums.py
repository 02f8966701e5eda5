from enum import Enum


class OgReEnum(Enum):
    """Enum типа разговора: оригинал или воспроизведение."""

    ORIGINAL = "OG"
    REENACTED = "RE"

    @property
    def opposite(self) -> "OgReEnum":
        """Возвращает противоположный тип разговора."""
        if self is OgReEnum.ORIGINAL:
            return OgReEnum.REENACTED
        return OgReEnum.ORIGINAL


class AudioLayoutEnum(Enum):
    """Enum раскладки аудио разговора на диске."""

    STEREO_SINGLE = "stereo_single"
    DUAL_MONO = "dual_mono"


class FragmentKindEnum(Enum):
    """Enum вида фрагмента."""

    LONG = "long"
    SHORT = "short"


class SideEnum(Enum):
    """Enum канала (говорящего) фрагмента."""

    LEFT = "left"
    RIGHT = "right"
    MIXED = "mixed"

    @property
    def suffix(self) -> str:
        """Суффикс имени файла короткого фрагмента: L или R."""
        return self.value[0].upper()


class TierNameEnum(Enum):
    """Enum допустимых слоев разметки."""

    UTTERANCE = "Utterance"
    LITTLE_LEFT = "LittleLeft"
    LITTLE_RIGHT = "LittleRight"

    @property
    def kind(self) -> FragmentKindEnum:
        """Вид фрагментов, которые размечаются в слое."""
        if self is TierNameEnum.UTTERANCE:
            return FragmentKindEnum.LONG
        return FragmentKindEnum.SHORT

    @property
    def side(self) -> SideEnum:
        """Канал фрагментов, которые размечаются в слое."""
        match self:
            case TierNameEnum.LITTLE_LEFT:
                return SideEnum.LEFT
            case TierNameEnum.LITTLE_RIGHT:
                return SideEnum.RIGHT
        return SideEnum.MIXED


class DiagnosticCodeEnum(Enum):
    """Enum кодов диагностик.

    Порядок членов задает порядок диагностик в отчете.
    """

    MISSING_MARKUP = "MISSING_MARKUP"
    MISSING_AUDIO = "MISSING_AUDIO"
    BAD_CONVERSATION_ID = "BAD_CONVERSATION_ID"
    BAD_OG_RE_CODE = "BAD_OG_RE_CODE"
    BAD_TRANSLATION = "BAD_TRANSLATION"
    BAD_MARKUP_VALUE = "BAD_MARKUP_VALUE"
    BAD_TIER = "BAD_TIER"
    DUPLICATE_MARKUP_VALUE = "DUPLICATE_MARKUP_VALUE"
    FRAGMENT_TRANSLATION_MISMATCH = "FRAGMENT_TRANSLATION_MISMATCH"
    FRAGMENT_OUT_OF_RANGE = "FRAGMENT_OUT_OF_RANGE"

    @property
    def order(self) -> int:
        """Порядковый номер кода в отчете."""
        return list(DiagnosticCodeEnum).index(self)

    @property
    def is_conversation_level(self) -> bool:
        """True - код относится к разговору, False - к разметке."""
        return self.order < 5

    @property
    def excludes_conversation(self) -> bool:
        """True - диагностика исключает разговор вместе с партнером.

        Неверное имя слоя ломает структуру всей разметки, поэтому
        исключает разговор, хотя и относится к разметке.
        """
        return self.is_conversation_level or self is DiagnosticCodeEnum.BAD_TIER
