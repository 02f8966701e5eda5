import re

from core.exceptions import FormatError

DURATION_PATTERN = re.compile(r"^([0-9]{2,}):([0-5][0-9])\.([0-9]{3})$")


def ms_to_sample(ms: int, rate: int) -> int:
    """Переводит миллисекунды в индекс отсчета с округлением половины вверх.

    :param ms: Время в миллисекундах, не меньше нуля.
    :param rate: Частота дискретизации.
    :return: Индекс отсчета.
    """
    # floor(ms * rate / 1000 + 1/2) in integer arithmetic
    return (2 * ms * rate + 1000) // 2000


def format_duration(ms: int) -> str:
    """Форматирует миллисекунды как `mm:ss.ms`.

    Минуты занимают больше двух цифр только начиная со 100 минут.

    :param ms: Длительность в миллисекундах, не меньше нуля.
    :raises FormatError: Длительность отрицательна.
    :return: Строка вида `02:18.700`.
    """
    if ms < 0:
        raise FormatError(str(ms), "Duration must not be negative.")
    minutes, rest = divmod(ms, 60_000)
    seconds, millis = divmod(rest, 1000)
    return f"{minutes:02d}:{seconds:02d}.{millis:03d}"


def parse_duration(text: str) -> int:
    """Разбирает строку `mm:ss.ms` в миллисекунды.

    :param text: Строка длительности.
    :raises FormatError: Строка не соответствует формату.
    :return: Длительность в миллисекундах.
    """
    match = DURATION_PATTERN.match(text)
    if match is None:
        raise FormatError(text)
    minutes, seconds, millis = (int(group) for group in match.groups())
    if len(match.group(1)) > 2 and minutes < 100:
        raise FormatError(text)
    return minutes * 60_000 + seconds * 1000 + millis
