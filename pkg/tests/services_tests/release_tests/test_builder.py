import json

import numpy as np
import pytest

from core.exceptions import ReleaseError, StrictModeError
from infrastructure.enums import FaultKindEnum, TierNameEnum
from infrastructure.formats import read_wav_file
from infrastructure.repositories.tables import (
    ConversationRepository,
    FragmentRepository,
)
from infrastructure.schemas.pairing import RedactionSpan
from infrastructure.schemas.release import ReleaseConfig
from infrastructure.schemas.testkit import AnnotationPlan
from services.audio import ms_to_sample, parse_duration
from services.corpus import parse_conversation_id, write_metadata
from services.release import build_release, redact
from services.testkit import (
    inject_fault,
    make_fixture,
    oracle_pairs,
    random_spec,
    render_audio,
)
from tests.fixtures.audio import make_buffer
from tests.fixtures.corpus import (  # noqa: F401
    built_release,
    corpus_dir,
    release_spec,
)

UTTERANCE = TierNameEnum.UTTERANCE.value


def tree_bytes(root):
    return {
        path.relative_to(root).as_posix(): path.read_bytes()
        for path in sorted(root.rglob("*"))
        if path.is_file()
    }


def clip_stems(directory):
    return {path.stem for path in directory.glob("*.wav")}


def build(input_dir, output_dir, **kwargs):
    return build_release(
        ReleaseConfig(input_dir=input_dir, output_dir=output_dir, **kwargs)
    )


def test_manifest_counts(built_release):
    output_dir, manifest = built_release

    assert manifest.counts == {
        "recordings": 4,
        "fragments_long": 12,
        "fragments_short": 20,
        "fragments_short_concat": 8,
        "markup": 4,
        "fragment_tables": 2,
    }
    assert len(list((output_dir / "recordings").glob("*.wav"))) == 4
    assert len(list((output_dir / "markup").glob("*.eaf"))) == 4
    assert len(list((output_dir / "fragments-short-concat").glob("*.wav"))) == 8
    assert manifest.excluded_conversations == ()
    assert manifest.diagnostics == {}


def test_manifest_file(built_release):
    output_dir, manifest = built_release

    written = json.loads((output_dir / "manifest.json").read_text(encoding="utf-8"))

    assert written == manifest.model_dump(mode="json")
    assert written["redaction_mode"] == "silence"


def test_clips_match_tables(built_release):
    output_dir, _ = built_release

    for repository, directory in (
        (FragmentRepository.long(output_dir), output_dir / "fragments-long"),
        (FragmentRepository.short(output_dir), output_dir / "fragments-short"),
    ):
        rows = repository.load()
        assert {row.id for row in rows} == clip_stems(directory)
        assert [row.id for row in rows] == sorted(row.id for row in rows)
        by_id = {row.id: row for row in rows}
        for row in rows:
            assert by_id[row.trans_id].trans_id == row.id
            assert by_id[row.trans_id].conv_id != row.conv_id


def test_clip_shapes(built_release):
    output_dir, _ = built_release

    for repository, directory, channels in (
        (FragmentRepository.long(output_dir), output_dir / "fragments-long", 2),
        (FragmentRepository.short(output_dir), output_dir / "fragments-short", 1),
    ):
        for row in repository.load():
            clip = read_wav_file(directory / f"{row.id}.wav")
            start = ms_to_sample(parse_duration(row.time_start), clip.sample_rate)
            end = ms_to_sample(parse_duration(row.time_end), clip.sample_rate)
            assert clip.channels == channels
            assert clip.frames == end - start


def test_concatenation_lengths(built_release):
    output_dir, _ = built_release
    short_dir = output_dir / "fragments-short"

    for path in (output_dir / "fragments-short-concat").glob("*.wav"):
        name, side = path.stem.rsplit("_", 1)
        suffix = "_L" if side == "left" else "_R"
        clips = [
            read_wav_file(clip)
            for clip in short_dir.glob(f"{name}_*{suffix}.wav")
        ]
        assert read_wav_file(path).frames == sum(clip.frames for clip in clips)


def test_conversation_table(built_release, release_spec):
    output_dir, manifest = built_release

    records = ConversationRepository(output_dir).load()

    assert sorted(record.id for record in records) == list(manifest.conversations)
    by_id = {record.id: record for record in records}
    for record in records:
        assert by_id[record.trans_id].trans_id == record.id
    assert len(manifest.conversations) == len(release_spec.conversations)


def test_workers_do_not_change_output(tmp_path, corpus_dir):
    build(corpus_dir, tmp_path / "one", workers=1)
    build(corpus_dir, tmp_path / "four", workers=4)

    assert tree_bytes(tmp_path / "one") == tree_bytes(tmp_path / "four")


def test_redaction_silences_recording(tmp_path):
    spec = random_spec(seed=4, counts=[(3, 0, 0)])
    og = spec.conversations[0]
    target = next(item for item in og.annotations if item.tier == UTTERANCE)
    span = AnnotationPlan(
        tier=UTTERANCE,
        value="DELETE",
        start_ms=target.start_ms + 10,
        end_ms=target.start_ms + 200,
    )
    spec = spec.replace(
        og, og.model_copy(update={"annotations": og.annotations + (span,)})
    )
    output_dir = tmp_path / "release"

    manifest = build(make_fixture(spec, tmp_path / "input"), output_dir)

    recording = read_wav_file(output_dir / "recordings" / f"{og.id}.wav")
    original = render_audio(og.audio, spec.sample_rate)
    start = ms_to_sample(span.start_ms, spec.sample_rate)
    end = ms_to_sample(span.end_ms, spec.sample_rate)
    assert not recording.samples[start:end].any()
    assert np.array_equal(recording.samples[:start], original.samples[:start])
    assert np.array_equal(recording.samples[end:], original.samples[end:])
    assert manifest.counts["fragments_long"] == 4
    value = target.value.lstrip("#")
    assert f"{og.id}_{value}" not in clip_stems(output_dir / "fragments-long")


def test_strict_mode_writes_nothing(tmp_path, release_spec):
    faulty = inject_fault(release_spec, FaultKindEnum.BAD_TIER)
    input_dir = make_fixture(faulty, tmp_path / "input")

    with pytest.raises(StrictModeError):
        build(input_dir, tmp_path / "release", strict=True)

    assert not (tmp_path / "release").exists()


def test_output_must_be_empty(tmp_path, corpus_dir):
    output_dir = tmp_path / "release"
    output_dir.mkdir()
    (output_dir / "stale.txt").write_text("x")

    with pytest.raises(ReleaseError):
        build(corpus_dir, output_dir)


def test_same_directories_rejected(corpus_dir):
    with pytest.raises(ValueError):
        ReleaseConfig(input_dir=corpus_dir, output_dir=corpus_dir)


def test_empty_corpus(tmp_path):
    input_dir = tmp_path / "input"
    (input_dir / "recordings").mkdir(parents=True)
    write_metadata(input_dir, (), (), [])
    output_dir = tmp_path / "release"

    manifest = build(input_dir, output_dir)

    assert manifest.conversations == ()
    assert manifest.counts["recordings"] == 0
    assert manifest.counts["fragment_tables"] == 2
    assert FragmentRepository.long(output_dir).load() == []
    assert FragmentRepository.short(output_dir).load() == []


def test_dual_mono_corpus(tmp_path):
    spec = random_spec(seed=6, counts=[(2, 1, 1)], dual_mono=True)
    output_dir = tmp_path / "release"

    manifest = build(make_fixture(spec, tmp_path / "input"), output_dir)

    assert manifest.counts["recordings"] == 2
    for plan in spec.conversations:
        recording = read_wav_file(output_dir / "recordings" / f"{plan.id}.wav")
        assert recording == render_audio(plan.audio, spec.sample_rate)


@pytest.mark.parametrize("kind", list(FaultKindEnum))
def test_fault_drops_only_faulty_fragments(tmp_path, kind):
    spec = random_spec(seed=9, counts=[(2, 1, 1), (2, 1, 1)])
    faulty = inject_fault(spec, kind)
    output_dir = tmp_path / "release"

    manifest = build(make_fixture(faulty, tmp_path / "input"), output_dir)

    expected = oracle_pairs(faulty)
    written = clip_stems(output_dir / "fragments-long") | clip_stems(
        output_dir / "fragments-short"
    )
    assert written == {name for pair in expected.pairs for name in pair}
    assert spec.conversations[2].id in manifest.conversations
    assert manifest.diagnostics == {kind.code.value: 1}


@pytest.mark.parametrize("end_ms", [1000, 1500])
def test_redaction_past_end_silences_last_frames(end_ms):
    # 20 frames past the last whole millisecond.
    buf = make_buffer(ms_to_sample(1000, 44100) + 20)
    span = RedactionSpan(
        conv_id=parse_conversation_id("EN_006"), start_ms=950, end_ms=end_ms
    )

    redacted = redact(buf, [span])

    start = ms_to_sample(950, 44100)
    assert redacted.frames == buf.frames
    assert not redacted.samples[start:].any()
    assert np.array_equal(redacted.samples[:start], buf.samples[:start])


def test_annotation_past_recording_end_drops_its_pair(tmp_path):
    spec = random_spec(seed=4, counts=[(3, 0, 0)])
    first, second = spec.conversations
    duration = first.audio.duration_ms
    overrun = AnnotationPlan(
        tier=UTTERANCE, value="#90", start_ms=duration - 100, end_ms=duration + 500
    )
    inside = AnnotationPlan(tier=UTTERANCE, value="#90", start_ms=0, end_ms=9)
    for plan, extra in ((first, overrun), (second, inside)):
        annotations = plan.annotations + (extra,)
        spec = spec.replace(plan, plan.model_copy(update={"annotations": annotations}))
    output_dir = tmp_path / "release"

    manifest = build(make_fixture(spec, tmp_path / "input"), output_dir)

    assert manifest.diagnostics == {"FRAGMENT_OUT_OF_RANGE": 1}
    assert manifest.counts["fragments_long"] == 6
    stems = clip_stems(output_dir / "fragments-long")
    assert f"{first.id}_90" not in stems
    assert f"{second.id}_90" not in stems


@pytest.mark.parametrize("existed", [False, True])
def test_failed_build_leaves_no_output(tmp_path, release_spec, existed):
    input_dir = make_fixture(release_spec, tmp_path / "input")
    victim = release_spec.conversations[-1]
    wav_path = input_dir / "recordings" / f"{victim.id}.wav"
    wav_path.write_bytes(wav_path.read_bytes()[:64])
    output_dir = tmp_path / "release"
    if existed:
        output_dir.mkdir()

    with pytest.raises(ReleaseError):
        build(input_dir, output_dir, workers=1)

    if existed:
        assert list(output_dir.iterdir()) == []
    else:
        assert not output_dir.exists()
