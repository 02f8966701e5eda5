import pytest

from core.exceptions import MetadataError
from services.corpus import load_metadata, write_metadata
from services.testkit import make_fixture, random_spec

CONVERSATION_HEADER = (
    "id,date,original_or_reenacted,participant_id_left,participant_id_right,"
    "producer_id,trans_id\n"
)


def test_round_trip(tmp_path):
    make_fixture(random_spec(seed=1, counts=[(1, 0, 0), (2, 1, 1)]), tmp_path)
    tables = [
        (tmp_path / name).read_bytes()
        for name in ("participant.csv", "producer.csv", "conversation.csv")
    ]

    metadata = load_metadata(tmp_path)
    write_metadata(tmp_path / "copy", *metadata)

    assert len(metadata.participants) == 4
    assert len(metadata.conversations) == 4
    assert [
        (tmp_path / "copy" / name).read_bytes()
        for name in ("participant.csv", "producer.csv", "conversation.csv")
    ] == tables


def test_rows_sorted_by_id(tmp_path):
    metadata = load_metadata(
        make_fixture(random_spec(seed=2, counts=[(1, 0, 0)] * 3), tmp_path)
    )

    ids = [record.id for record in metadata.conversations]
    assert ids == sorted(ids)


def test_duplicate_conversation_id(tmp_path):
    make_fixture(random_spec(seed=3, counts=[(1, 0, 0)]), tmp_path)
    table = tmp_path / "conversation.csv"
    lines = table.read_text(encoding="utf-8").splitlines(keepends=True)
    duplicate = lines[1].replace(lines[1].split(",")[0], lines[1].split(",")[0].lower())
    table.write_text("".join(lines + [duplicate]), encoding="utf-8")

    with pytest.raises(MetadataError) as exc_info:
        load_metadata(tmp_path)

    assert (exc_info.value.line, exc_info.value.column) == (4, "id")


def test_unknown_participant(tmp_path):
    make_fixture(random_spec(seed=4, counts=[(1, 0, 0)]), tmp_path)
    (tmp_path / "conversation.csv").write_text(
        CONVERSATION_HEADER + "EN_001,05_11_2022,OG,1,99,1,\n", encoding="utf-8"
    )

    with pytest.raises(MetadataError) as exc_info:
        load_metadata(tmp_path)

    assert exc_info.value.file == "conversation.csv"
    assert (exc_info.value.line, exc_info.value.column) == (2, "participant_id_right")


def test_unknown_producer(tmp_path):
    make_fixture(random_spec(seed=4, counts=[(1, 0, 0)]), tmp_path)
    (tmp_path / "conversation.csv").write_text(
        CONVERSATION_HEADER + "EN_001,05_11_2022,OG,1,2,5,\n", encoding="utf-8"
    )

    with pytest.raises(MetadataError) as exc_info:
        load_metadata(tmp_path)

    assert exc_info.value.column == "producer_id"


def test_missing_table(tmp_path):
    make_fixture(random_spec(seed=5, counts=[(1, 0, 0)]), tmp_path)
    (tmp_path / "producer.csv").unlink()

    with pytest.raises(MetadataError) as exc_info:
        load_metadata(tmp_path)

    assert exc_info.value.file == "producer.csv"
