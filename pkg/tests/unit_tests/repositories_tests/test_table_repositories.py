import csv

import pytest

from core.exceptions import MetadataError


def write(path, text):
    path.write_text(text, encoding="utf-8")


def test_participant_round_trip(tmp_path):
    from infrastructure.repositories.tables import ParticipantRepository
    from infrastructure.schemas.corpus import Participant

    data = {
        "id": 12,
        "lang1": "EN",
        "lang2": "es",
        "lang_strength": 2,
        "dialect_note1": "Texas, US",
        "is_producer": True,
    }
    participant = Participant(**data)

    ParticipantRepository(tmp_path).dump([participant])
    loaded = ParticipantRepository(tmp_path).load()

    assert loaded == [participant]
    assert loaded[0].lang1.code == "en"
    assert (tmp_path / "participant.csv").read_text(encoding="utf-8") == (
        "id,lang1,lang2,lang_strength,dialect_note1,dialect_note2,is_producer,notes\n"
        '12,en,es,2,"Texas, US",,*,\n'
    )


def test_participant_bad_row(tmp_path):
    from infrastructure.repositories.tables import ParticipantRepository

    write(
        tmp_path / "participant.csv",
        "id,lang1,lang2,lang_strength,dialect_note1,dialect_note2,is_producer,notes\n"
        "1,en,es,3,,,,\n"
        "2,en,es,7,,,,\n",
    )

    with pytest.raises(MetadataError) as exc_info:
        ParticipantRepository(tmp_path).load()

    assert exc_info.value.line == 3
    assert exc_info.value.column == "lang_strength"


def test_participant_bad_producer_mark(tmp_path):
    from infrastructure.repositories.tables import ParticipantRepository

    write(
        tmp_path / "participant.csv",
        "id,lang1,lang2,lang_strength,dialect_note1,dialect_note2,is_producer,notes\n"
        "1,en,es,3,,,yes,\n",
    )

    with pytest.raises(MetadataError) as exc_info:
        ParticipantRepository(tmp_path).load()

    assert exc_info.value.column == "is_producer"
    assert exc_info.value.line == 2


def test_wrong_header(tmp_path):
    from infrastructure.repositories.tables import ProducerRepository

    write(tmp_path / "producer.csv", "name,id\nAnna,1\n")

    with pytest.raises(MetadataError) as exc_info:
        ProducerRepository(tmp_path).load()

    assert exc_info.value.line == 1


def test_short_row(tmp_path):
    from infrastructure.repositories.tables import ProducerRepository

    write(tmp_path / "producer.csv", "id,name\n1\n")

    with pytest.raises(MetadataError) as exc_info:
        ProducerRepository(tmp_path).load()

    assert exc_info.value.line == 2


def test_missing_file(tmp_path):
    from infrastructure.repositories.tables import ProducerRepository

    repository = ProducerRepository(tmp_path)

    assert not repository.exists()
    with pytest.raises(MetadataError):
        repository.load()


def test_conversation_trans_id(tmp_path):
    from infrastructure.repositories.tables import ConversationRepository

    write(
        tmp_path / "conversation.csv",
        "id,date,original_or_reenacted,participant_id_left,participant_id_right,"
        "producer_id,trans_id\n"
        "EN_006,05_11_2022,OG,1,2,1,\n"
        "ES_006,05_11_2022,RE,1,2,1,EN_006\n",
    )

    records = ConversationRepository(tmp_path).load()

    assert [record.trans_id for record in records] == [None, "EN_006"]


def test_conversation_bad_date(tmp_path):
    from infrastructure.repositories.tables import ConversationRepository

    write(
        tmp_path / "conversation.csv",
        "id,date,original_or_reenacted,participant_id_left,participant_id_right,"
        "producer_id,trans_id\n"
        "EN_006,2022-11-05,OG,1,2,1,\n",
    )

    with pytest.raises(MetadataError) as exc_info:
        ConversationRepository(tmp_path).load()

    assert (exc_info.value.line, exc_info.value.column) == (2, "date")


def test_fragment_tables(tmp_path):
    from infrastructure.repositories.tables import FragmentRepository
    from infrastructure.schemas.release import FragmentRow

    row = FragmentRow(
        id="EN_006_1",
        time_start="00:01.000",
        time_end="00:02.500",
        duration="00:01.500",
        conv_id="EN_006",
        trans_id="ES_006_1",
    )

    FragmentRepository.long(tmp_path).dump([row])
    FragmentRepository.short(tmp_path).dump([])

    assert FragmentRepository.long(tmp_path).load() == [row]
    assert FragmentRepository.short(tmp_path).load() == []
    assert (tmp_path / "fragments-short.csv").read_text(encoding="utf-8") == (
        "id,time_start,time_end,duration,conv_id,trans_id\n"
    )


def test_diagnostic_report(tmp_path):
    from infrastructure.enums import DiagnosticCodeEnum
    from infrastructure.repositories.tables import DiagnosticReportRepository
    from services.validation import make_diagnostic

    diagnostics = [
        make_diagnostic(DiagnosticCodeEnum.MISSING_AUDIO, "EN_006"),
        make_diagnostic(
            DiagnosticCodeEnum.DUPLICATE_MARKUP_VALUE, "EN_006", "Utterance", "7"
        ),
    ]
    repository = DiagnosticReportRepository(tmp_path / "report.csv")

    repository.dump(diagnostics)

    assert repository.load() == diagnostics


def test_repository_type_check():
    from infrastructure.repositories.tables import ProducerRepository

    with pytest.raises(TypeError):
        ProducerRepository("not a path")


def test_diagnostic_report_keeps_separator_in_tier(tmp_path):
    from infrastructure.enums import DiagnosticCodeEnum
    from infrastructure.repositories.tables import DiagnosticReportRepository
    from services.validation import make_diagnostic

    diagnostics = [make_diagnostic(DiagnosticCodeEnum.BAD_TIER, "EN_006", "A / B")]
    repository = DiagnosticReportRepository(tmp_path / "report.csv")

    repository.dump(diagnostics)

    (loaded,) = repository.load()
    assert loaded.tier == "A / B"
    assert loaded.value is None
    assert loaded.subject == "EN_006 / A / B"


def test_table_not_utf8(tmp_path):
    from infrastructure.repositories.tables import ProducerRepository

    (tmp_path / "producer.csv").write_bytes(b"id,name\n1,Op\xe9rator\n")

    with pytest.raises(MetadataError) as exc_info:
        ProducerRepository(tmp_path).load()

    assert exc_info.value.file == "producer.csv"
    assert exc_info.value.line is not None


def test_table_malformed_csv(tmp_path):
    from infrastructure.repositories.tables import ProducerRepository

    oversized = b"x" * (csv.field_size_limit() + 1)
    (tmp_path / "producer.csv").write_bytes(b"id,name\n1," + oversized + b"\n")

    with pytest.raises(MetadataError) as exc_info:
        ProducerRepository(tmp_path).load()

    assert exc_info.value.file == "producer.csv"
