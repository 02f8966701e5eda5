from pathlib import PurePosixPath
from typing import Dict, List, Optional
from urllib.parse import urlparse

from lxml import etree
from pydantic import ValidationError

from core.exceptions import ParseError, SerializeError
from infrastructure.schemas.markup import Annotation, MarkupDocument, Tier

ROOT_TAG = "ANNOTATION_DOCUMENT"
EAF_FORMAT = "3.0"
EAF_DATE = "1970-01-01T00:00:00+00:00"
LINGUISTIC_TYPE_ID = "default-lt"
CV_TAG = "CONTROLLED_VOCABULARY"
CV_REF_ATTR = "CONTROLLED_VOCABULARY_REF"
AUDIO_MIME_TYPE = "audio/x-wav"


def _byte_offset(data: bytes, line: int, column: int) -> int:
    """Переводит позицию парсера (строка, столбец) в смещение в байтах.

    :param data: Исходный документ.
    :param line: Номер строки, с единицы.
    :param column: Номер столбца, с единицы.
    :return: Смещение от начала документа.
    """
    offset = 0
    for _ in range(max(line - 1, 0)):
        newline = data.find(b"\n", offset)
        if newline < 0:
            return len(data)
        offset = newline + 1
    return min(offset + max(column - 1, 0), len(data))


def _media_name(descriptor: etree._Element) -> Optional[str]:
    """Извлекает имя медиа файла из MEDIA_DESCRIPTOR."""
    url = descriptor.get("MEDIA_URL") or descriptor.get("RELATIVE_MEDIA_URL")
    if not url:
        return None
    name = PurePosixPath(urlparse(url).path).name
    return name or None


def _read_time_slots(root: etree._Element) -> Dict[str, Optional[int]]:
    """Читает секцию TIME_ORDER.

    :param root: Корневой элемент документа.
    :raises ParseError: Значение слота не является целым числом.
    :return: Словарь id слота -> время в мс (None для слотов без времени).
    """
    slots: Dict[str, Optional[int]] = {}
    for slot in root.iterfind("TIME_ORDER/TIME_SLOT"):
        slot_id = slot.get("TIME_SLOT_ID")
        if slot_id is None:
            continue
        value = slot.get("TIME_VALUE")
        try:
            slots[slot_id] = None if value is None else int(value)
        except ValueError:
            raise ParseError(
                f"Time slot {slot_id} has a non-integer value"
            ) from None
    return slots


def _reject_vocabularies(root: etree._Element) -> None:
    """Проверяет, что документ не использует контролируемые словари.

    :raises ParseError: Найден словарь или ссылка на него.
    """
    if root.find(CV_TAG) is not None:
        raise ParseError("Controlled vocabularies are not supported")
    for linguistic_type in root.iterfind("LINGUISTIC_TYPE"):
        if linguistic_type.get(CV_REF_ATTR):
            type_id = linguistic_type.get("LINGUISTIC_TYPE_ID", "?")
            raise ParseError(
                f"Linguistic type {type_id} refers to a controlled vocabulary"
            )


def _resolve_slot(
    slots: Dict[str, Optional[int]],
    slot_id: Optional[str],
    annotation_id: str,
) -> int:
    """Возвращает время слота, на который ссылается аннотация."""
    if slot_id is None or slot_id not in slots:
        raise ParseError(
            "Reference to a missing time slot", annotation_id=annotation_id
        )
    value = slots[slot_id]
    if value is None:
        raise ParseError(
            "Reference to an unvalued time slot", annotation_id=annotation_id
        )
    if value < 0:
        raise ParseError(
            f"Time slot {slot_id} has a negative value {value}",
            annotation_id=annotation_id,
        )
    return value


def _read_tier(
    element: etree._Element,
    slots: Dict[str, Optional[int]],
) -> Tier:
    """Читает один слой с выровненными по времени аннотациями."""
    name = element.get("TIER_ID")
    if not name:
        raise ParseError("Tier without TIER_ID")
    if element.get(CV_REF_ATTR):
        raise ParseError(f"Tier {name} refers to a controlled vocabulary")
    annotations: List[Annotation] = []
    for wrapper in element.iterfind("ANNOTATION"):
        for item in wrapper:
            if item.tag == "REF_ANNOTATION":
                raise ParseError(
                    "Reference annotations are not supported",
                    annotation_id=item.get("ANNOTATION_ID", "?"),
                )
            if item.tag != "ALIGNABLE_ANNOTATION":
                continue
            annotation_id = item.get("ANNOTATION_ID", "?")
            start_ms = _resolve_slot(slots, item.get("TIME_SLOT_REF1"), annotation_id)
            end_ms = _resolve_slot(slots, item.get("TIME_SLOT_REF2"), annotation_id)
            if start_ms >= end_ms:
                raise ParseError(
                    f"Annotation starts at {start_ms} ms, "
                    f"not before its end {end_ms} ms",
                    annotation_id=annotation_id,
                )
            value_element = item.find("ANNOTATION_VALUE")
            text = value_element.text if value_element is not None else None
            if not text or not text.strip():
                raise ParseError(
                    "Annotation value is empty", annotation_id=annotation_id
                )
            try:
                annotation = Annotation(value=text, start_ms=start_ms, end_ms=end_ms)
            except ValidationError as exc:
                raise ParseError(
                    f"Annotation is invalid: {exc.error_count()} errors",
                    annotation_id=annotation_id,
                ) from exc
            annotations.append(annotation)
    return Tier(name=name, annotations=tuple(annotations))


def parse_eaf(data: bytes) -> MarkupDocument:
    """Разбирает EAF документ в модель слоев и аннотаций.

    Поддерживаются только выровненные по времени аннотации. Неизвестные
    элементы и атрибуты игнорируются.

    :param data: Содержимое .eaf файла в UTF-8.
    :raises ParseError: Документ не является корректным XML, ссылается
        на отсутствующий слот или слот с отрицательным временем, содержит
        ссылочные аннотации, контролируемые словари или аннотацию с
        началом не раньше конца.
    :return: MarkupDocument
    """
    parser = etree.XMLParser(resolve_entities=False, no_network=True, huge_tree=True)
    try:
        root = etree.fromstring(data, parser)
    except etree.XMLSyntaxError as exc:
        line, column = exc.position or (1, 1)
        raise ParseError(
            f"Malformed XML: {exc.msg}",
            offset=_byte_offset(data, line or 1, column or 1),
        ) from exc
    if root.tag != ROOT_TAG:
        raise ParseError(
            f"Root element is {root.tag!r}, expected {ROOT_TAG!r}", offset=0
        )

    _reject_vocabularies(root)
    slots = _read_time_slots(root)
    descriptors = root.iterfind("HEADER/MEDIA_DESCRIPTOR")
    media = [name for name in map(_media_name, descriptors) if name]
    tiers = [_read_tier(element, slots) for element in root.iterfind("TIER")]
    names = [tier.name for tier in tiers]
    if len(names) != len(set(names)):
        raise ParseError("Tier names are not unique")
    return MarkupDocument(media_descriptors=tuple(media), tiers=tuple(tiers))


def _check_document(doc: MarkupDocument) -> None:
    """Повторно проверяет инварианты документа перед записью.

    :param doc: Документ разметки.
    :raises SerializeError: Документ нарушает инварианты модели.
    """
    try:
        MarkupDocument.model_validate(doc.model_dump())
    except ValidationError as exc:
        raise SerializeError(
            f"Markup document is invalid: {exc.error_count()} errors"
        ) from exc


def serialize_eaf(doc: MarkupDocument) -> bytes:
    """Записывает документ разметки в EAF.

    Слоты времени нумеруются канонически: по два на аннотацию в порядке
    слоев и аннотаций.

    :param doc: Документ разметки.
    :raises SerializeError: Документ нарушает инварианты модели.
    :return: Содержимое .eaf файла в UTF-8.
    """
    _check_document(doc)
    root = etree.Element(
        ROOT_TAG,
        {"AUTHOR": "", "DATE": EAF_DATE, "FORMAT": EAF_FORMAT, "VERSION": EAF_FORMAT},
    )
    header = etree.SubElement(
        root, "HEADER", {"MEDIA_FILE": "", "TIME_UNITS": "milliseconds"}
    )
    for name in doc.media_descriptors:
        etree.SubElement(
            header,
            "MEDIA_DESCRIPTOR",
            {
                "MEDIA_URL": name,
                "MIME_TYPE": AUDIO_MIME_TYPE,
                "RELATIVE_MEDIA_URL": f"./{name}",
            },
        )

    time_order = etree.SubElement(root, "TIME_ORDER")
    slot_number = 0
    annotation_number = 0
    tier_elements: List[etree._Element] = []
    for tier in doc.tiers:
        tier_element = etree.Element(
            "TIER", {"LINGUISTIC_TYPE_REF": LINGUISTIC_TYPE_ID, "TIER_ID": tier.name}
        )
        for annotation in tier.annotations:
            refs = []
            for time_ms in (annotation.start_ms, annotation.end_ms):
                slot_number += 1
                slot_id = f"ts{slot_number}"
                etree.SubElement(
                    time_order,
                    "TIME_SLOT",
                    {"TIME_SLOT_ID": slot_id, "TIME_VALUE": str(time_ms)},
                )
                refs.append(slot_id)
            annotation_number += 1
            wrapper = etree.SubElement(tier_element, "ANNOTATION")
            alignable = etree.SubElement(
                wrapper,
                "ALIGNABLE_ANNOTATION",
                {
                    "ANNOTATION_ID": f"a{annotation_number}",
                    "TIME_SLOT_REF1": refs[0],
                    "TIME_SLOT_REF2": refs[1],
                },
            )
            etree.SubElement(alignable, "ANNOTATION_VALUE").text = annotation.value
        tier_elements.append(tier_element)

    root.extend(tier_elements)
    etree.SubElement(
        root,
        "LINGUISTIC_TYPE",
        {
            "GRAPHIC_REFERENCES": "false",
            "LINGUISTIC_TYPE_ID": LINGUISTIC_TYPE_ID,
            "TIME_ALIGNABLE": "true",
        },
    )
    return etree.tostring(
        root, xml_declaration=True, encoding="UTF-8", pretty_print=True
    )
