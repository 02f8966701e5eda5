import pytest
from pydantic import ValidationError

from infrastructure.enums import (
    DiagnosticCodeEnum,
    FragmentKindEnum,
    SideEnum,
    TierNameEnum,
)
from infrastructure.schemas.corpus import ConversationId, LanguageCode, Participant
from infrastructure.schemas.markup import Annotation, MarkupDocument, Tier
from infrastructure.schemas.pairing import Fragment, FragmentId
from infrastructure.schemas.release import ReleaseConfig


def test_language_code():
    assert LanguageCode(code="EN").code == "en"
    assert str(LanguageCode.model_validate("Ja")) == "ja"
    for code in ("eng", "e1", "qq"):
        with pytest.raises(ValidationError):
            LanguageCode(code=code)


def test_conversation_id():
    conversation_id = ConversationId(lang="bn", number=7)

    assert conversation_id.canonical == "BN_007"
    with pytest.raises(ValidationError):
        ConversationId(lang="bn", number=1000)


def test_participant():
    data = {"id": 1, "lang1": "en", "lang2": "es", "lang_strength": 5}

    assert Participant(**data).strength_label == "language 2 stronger"
    with pytest.raises(ValidationError):
        Participant(**{**data, "lang2": "EN"})
    with pytest.raises(ValidationError):
        Participant(**{**data, "lang_strength": 0})


def test_annotation():
    assert Annotation(value="  #3 ", start_ms=0, end_ms=1).value == "#3"
    with pytest.raises(ValidationError):
        Annotation(value=" ", start_ms=0, end_ms=1)
    with pytest.raises(ValidationError):
        Annotation(value="#3", start_ms=5, end_ms=5)


def test_tier_sorts_annotations():
    tier = Tier(
        name="Utterance",
        annotations=(
            Annotation(value="#2", start_ms=50, end_ms=60),
            Annotation(value="#1", start_ms=10, end_ms=20),
        ),
    )

    assert tier.values() == ["#1", "#2"]


def test_document_unique_tiers():
    with pytest.raises(ValidationError):
        MarkupDocument(tiers=(Tier(name="Utterance"), Tier(name="Utterance")))


def test_fragment():
    data = {
        "conv_id": ConversationId(lang="en", number=6),
        "kind": FragmentKindEnum.SHORT,
        "side": SideEnum.LEFT,
        "canonical_value": "3.34",
        "start_ms": 10,
        "end_ms": 40,
    }
    fragment = Fragment(**data)

    assert fragment.duration_ms == 30
    for update in (
        {"side": SideEnum.MIXED},
        {"kind": FragmentKindEnum.LONG},
        {"canonical_value": "#3"},
        {"end_ms": 10},
    ):
        with pytest.raises(ValidationError):
            Fragment(**{**data, **update})


def test_fragment_id():
    fragment_id = FragmentId(lang="es", conv_number=6, value="12")

    assert str(fragment_id) == "ES_006_12"


def test_release_config(tmp_path):
    with pytest.raises(ValidationError):
        ReleaseConfig(input_dir=tmp_path, output_dir=tmp_path / ".." / tmp_path.name)
    with pytest.raises(ValidationError):
        ReleaseConfig(input_dir=tmp_path, output_dir=tmp_path / "out", workers=0)


def test_tier_name_enum():
    assert TierNameEnum.UTTERANCE.kind is FragmentKindEnum.LONG
    assert TierNameEnum.LITTLE_RIGHT.side is SideEnum.RIGHT
    assert TierNameEnum.LITTLE_LEFT.kind is FragmentKindEnum.SHORT
    assert TierNameEnum.UTTERANCE.side is SideEnum.MIXED


def test_diagnostic_codes_excluding_conversation():
    excluding = [code for code in DiagnosticCodeEnum if code.excludes_conversation]

    assert excluding == [
        DiagnosticCodeEnum.MISSING_MARKUP,
        DiagnosticCodeEnum.MISSING_AUDIO,
        DiagnosticCodeEnum.BAD_CONVERSATION_ID,
        DiagnosticCodeEnum.BAD_OG_RE_CODE,
        DiagnosticCodeEnum.BAD_TRANSLATION,
        DiagnosticCodeEnum.BAD_TIER,
    ]
