from collections import defaultdict
from typing import Dict, Iterable, List, Tuple

from infrastructure.enums import FragmentKindEnum, SideEnum
from infrastructure.schemas.corpus import ConversationRecord
from infrastructure.schemas.markup import MarkupDocument
from infrastructure.schemas.pairing import (
    Fragment,
    FragmentId,
    FragmentPair,
    RedactionSpan,
)
from services.corpus import parse_conversation_id
from services.validation import canonical_value, is_delete, parse_tier_name

MatchKey = Tuple[FragmentKindEnum, SideEnum, str]


def extract_fragments(
    conv: ConversationRecord,
    doc: MarkupDocument,
) -> Tuple[List[Fragment], List[RedactionSpan]]:
    """Извлекает фрагменты и интервалы удаления из разметки разговора.

    Аннотации Utterance становятся длинными фрагментами, LittleLeft и
    LittleRight короткими с соответствующим каналом, а `DELETE` в
    Utterance интервалами удаления. Слои с неизвестным именем и
    неверные значения пропускаются: о них сообщает валидация.

    :param conv: Разговор с верным идентификатором.
    :param doc: Разметка разговора.
    :return: Фрагменты в порядке слоев и времени и интервалы удаления.
    """
    conv_id = parse_conversation_id(conv.id)
    fragments: List[Fragment] = []
    redactions: List[RedactionSpan] = []
    for tier in doc.tiers:
        tier_name = parse_tier_name(tier.name)
        if tier_name is None:
            continue
        for annotation in tier.annotations:
            if is_delete(tier.name, annotation.value):
                redactions.append(
                    RedactionSpan(
                        conv_id=conv_id,
                        start_ms=annotation.start_ms,
                        end_ms=annotation.end_ms,
                    )
                )
                continue
            value = canonical_value(annotation.value)
            if value is None:
                continue
            fragments.append(
                Fragment(
                    conv_id=conv_id,
                    kind=tier_name.kind,
                    side=tier_name.side,
                    canonical_value=value,
                    start_ms=annotation.start_ms,
                    end_ms=annotation.end_ms,
                )
            )
    return fragments, redactions


def overlaps(fragment: Fragment, span: RedactionSpan) -> bool:
    """True - интервалы [start, end) пересекаются хотя бы на 1 мс."""
    return fragment.start_ms < span.end_ms and span.start_ms < fragment.end_ms


def apply_redactions(
    fragments: Iterable[Fragment],
    redactions: Iterable[RedactionSpan],
) -> Tuple[List[Fragment], List[Fragment]]:
    """Отбрасывает фрагменты, пересекающиеся с интервалами удаления.

    :param fragments: Фрагменты одного разговора.
    :param redactions: Интервалы удаления того же разговора.
    :return: Оставленные и отброшенные фрагменты в исходном порядке.
    """
    spans = sorted(redactions, key=lambda span: (span.start_ms, span.end_ms))
    kept: List[Fragment] = []
    dropped: List[Fragment] = []
    for fragment in fragments:
        if any(overlaps(fragment, span) for span in spans):
            dropped.append(fragment)
        else:
            kept.append(fragment)
    return kept, dropped


def _group(fragments: Iterable[Fragment]) -> Dict[MatchKey, List[Fragment]]:
    """Группирует фрагменты по ключу сопоставления."""
    groups: Dict[MatchKey, List[Fragment]] = defaultdict(list)
    for fragment in fragments:
        groups[fragment.match_key].append(fragment)
    return groups


def _position(fragment: Fragment) -> tuple[int, int, str, str, str]:
    """Ключ сортировки фрагментов по времени."""
    return (
        fragment.start_ms,
        fragment.end_ms,
        fragment.kind.value,
        fragment.side.value,
        fragment.canonical_value,
    )


def pair_fragments(
    og_frags: Iterable[Fragment],
    re_frags: Iterable[Fragment],
) -> Tuple[List[FragmentPair], List[Fragment]]:
    """Сопоставляет фрагменты оригинала и воспроизведения.

    Пара образуется, если ровно один фрагмент с каждой стороны имеет
    одинаковые вид, канал и каноническое значение.

    :param og_frags: Фрагменты оригинала.
    :param re_frags: Фрагменты воспроизведения.
    :return: Пары по началу фрагмента оригинала и несопоставленные
        фрагменты (сначала оригинала, затем воспроизведения).
    """
    og_groups = _group(og_frags)
    re_groups = _group(re_frags)
    pairs: List[FragmentPair] = []
    unmatched_og: List[Fragment] = []
    unmatched_re: List[Fragment] = []
    for key, og_group in og_groups.items():
        re_group = re_groups.get(key, [])
        if len(og_group) == 1 and len(re_group) == 1:
            pairs.append(FragmentPair(og=og_group[0], re=re_group[0]))
        else:
            unmatched_og.extend(og_group)
    for key, re_group in re_groups.items():
        og_group = og_groups.get(key, [])
        if not (len(og_group) == 1 and len(re_group) == 1):
            unmatched_re.extend(re_group)

    pairs.sort(key=lambda pair: _position(pair.og))
    unmatched_og.sort(key=_position)
    unmatched_re.sort(key=_position)
    return pairs, unmatched_og + unmatched_re


def fragment_id(frag: Fragment) -> FragmentId:
    """Идентификатор фрагмента `<LANG>_<ddd>_<value>`."""
    return FragmentId(
        lang=frag.conv_id.lang,
        conv_number=frag.conv_id.number,
        value=frag.canonical_value,
    )


def fragment_name(frag: Fragment) -> str:
    """Имя фрагмента в таблицах и файлах релиза.

    Короткие фрагменты получают суффикс канала `_L` или `_R`, так как
    одно значение может встречаться в обоих слоях Little.
    """
    name = str(fragment_id(frag))
    if frag.kind is FragmentKindEnum.SHORT:
        return f"{name}_{frag.side.suffix}"
    return name
