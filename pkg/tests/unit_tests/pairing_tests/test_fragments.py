from infrastructure.enums import FragmentKindEnum, SideEnum
from infrastructure.schemas.corpus import ConversationRecord
from infrastructure.schemas.markup import Annotation, MarkupDocument, Tier
from infrastructure.schemas.validation import FragmentKey
from services.corpus import parse_conversation_id
from services.pairing import (
    apply_redactions,
    extract_fragments,
    fragment_name,
    pair_conversations,
    pair_fragments,
    strip_excluded,
)


def record(conversation_id, code):
    return ConversationRecord(
        id=conversation_id,
        date="05_11_2022",
        original_or_reenacted=code,
        participant_id_left=1,
        participant_id_right=2,
        producer_id=1,
    )


def document(**tiers):
    return MarkupDocument(
        tiers=tuple(
            Tier(
                name=name,
                annotations=tuple(
                    Annotation(value=value, start_ms=start, end_ms=end)
                    for value, start, end in annotations
                ),
            )
            for name, annotations in tiers.items()
        )
    )


def test_extract_fragments():
    doc = document(
        Utterance=[("#1", 0, 1000), ("DELETE", 1500, 1800), ("2.5", 2000, 2500)],
        LittleLeft=[("#1", 100, 300)],
        LittleRight=[("#1", 400, 600), ("bad", 700, 800)],
        Default=[("#9", 0, 10)],
    )

    fragments, redactions = extract_fragments(record("EN_006", "OG"), doc)

    assert [(f.kind, f.side, f.canonical_value) for f in fragments] == [
        (FragmentKindEnum.LONG, SideEnum.MIXED, "1"),
        (FragmentKindEnum.LONG, SideEnum.MIXED, "2.5"),
        (FragmentKindEnum.SHORT, SideEnum.LEFT, "1"),
        (FragmentKindEnum.SHORT, SideEnum.RIGHT, "1"),
    ]
    assert [(span.start_ms, span.end_ms) for span in redactions] == [(1500, 1800)]


def test_apply_redactions():
    doc = document(
        Utterance=[
            ("#1", 0, 1000),
            ("#2", 1000, 1500),
            ("DELETE", 1500, 1800),
            ("#3", 1799, 2000),
            ("#4", 1800, 2000),
        ]
    )
    fragments, redactions = extract_fragments(record("EN_006", "OG"), doc)

    kept, dropped = apply_redactions(fragments, redactions)

    assert [f.canonical_value for f in kept] == ["1", "2", "4"]
    assert [f.canonical_value for f in dropped] == ["3"]


def test_pair_fragments():
    og_doc = document(
        Utterance=[("#2", 3000, 4000), ("#1", 0, 1000), ("#5", 5000, 6000)],
        LittleLeft=[("#1", 100, 300)],
    )
    re_doc = document(
        Utterance=[("#1", 200, 900), ("#2", 1000, 2000), ("#7", 3000, 4000)],
        LittleRight=[("#1", 100, 300)],
    )
    og_frags, _ = extract_fragments(record("EN_006", "OG"), og_doc)
    re_frags, _ = extract_fragments(record("ES_006", "RE"), re_doc)

    pairs, unmatched = pair_fragments(og_frags, re_frags)

    assert [(p.og.canonical_value, p.re.canonical_value) for p in pairs] == [
        ("1", "1"),
        ("2", "2"),
    ]
    assert pairs[0].re.start_ms == 200
    assert sorted(f.canonical_value for f in unmatched) == ["1", "1", "5", "7"]


def test_pair_fragments_duplicates_do_not_pair():
    og_frags, _ = extract_fragments(
        record("EN_006", "OG"), document(Utterance=[("#1", 0, 10), ("1", 20, 30)])
    )
    re_frags, _ = extract_fragments(
        record("ES_006", "RE"), document(Utterance=[("#1", 0, 10)])
    )

    pairs, unmatched = pair_fragments(og_frags, re_frags)

    assert pairs == []
    assert len(unmatched) == 3


def test_fragment_name():
    doc = document(Utterance=[("#12", 0, 10)], LittleRight=[("3.1", 0, 10)])

    fragments, _ = extract_fragments(record("en_006", "OG"), doc)

    assert [fragment_name(f) for f in fragments] == ["EN_006_12", "EN_006_3.1_R"]


def test_strip_excluded():
    doc = document(
        Utterance=[("#1", 0, 10), ("#2", 20, 30), ("2x", 40, 50)],
        Default=[("#1", 0, 10)],
    )
    excluded = frozenset(
        {
            FragmentKey(conversation="EN_006", tier="Utterance", value="2"),
            FragmentKey(conversation="EN_006", tier="Utterance", value="2x"),
            FragmentKey(conversation="ES_006", tier="Utterance", value="1"),
        }
    )

    stripped = strip_excluded(record("EN_006", "OG"), doc, excluded)

    assert [tier.name for tier in stripped.tiers] == ["Utterance"]
    assert stripped.tiers[0].values() == ["#1"]


def test_pair_conversations_redaction_orphans_partner():
    og = record("EN_006", "OG")
    re = record("ES_006", "RE")
    og_doc = document(Utterance=[("#1", 0, 1000), ("#2", 2000, 3000)])
    re_doc = document(
        Utterance=[("#1", 0, 1000), ("#2", 2000, 3000), ("DELETE", 2500, 2600)]
    )

    plan = pair_conversations(og, re, og_doc, re_doc)

    assert [pair.og.canonical_value for pair in plan.pairs] == ["1"]
    assert sorted(f.conv_id.canonical for f in plan.dropped) == ["EN_006", "ES_006"]
    assert [span.conv_id for span in plan.redactions] == [
        parse_conversation_id("ES_006")
    ]
    assert plan.redactions_for(parse_conversation_id("ES_006"))
    assert not plan.redactions_for(parse_conversation_id("EN_006"))
