from infrastructure.enums import FaultKindEnum
from main import cli
from services.testkit import inject_fault, make_fixture
from tests.fixtures.corpus import corpus_dir, release_spec  # noqa: F401


def test_build(tmp_path, corpus_dir):
    assert cli(["build", str(corpus_dir), str(tmp_path / "release")]) == 0
    assert (tmp_path / "release" / "manifest.json").is_file()


def test_validate_reports_without_failing(tmp_path, release_spec):
    faulty = inject_fault(release_spec, FaultKindEnum.BAD_TIER)
    input_dir = make_fixture(faulty, tmp_path / "input")
    report = tmp_path / "report.csv"

    assert cli(["validate", str(input_dir), "--report", str(report)]) == 0
    assert "BAD_TIER" in report.read_text(encoding="utf-8")


def test_validate_strict(tmp_path, release_spec):
    faulty = inject_fault(release_spec, FaultKindEnum.BAD_TIER)
    input_dir = make_fixture(faulty, tmp_path / "input")

    assert cli(["validate", str(input_dir), "--strict"]) == 2


def test_validate_negative_time_slot(tmp_path, release_spec, corpus_dir):
    first = release_spec.conversations[0].id
    eaf_path = corpus_dir / "recordings" / f"{first}.eaf"
    data = eaf_path.read_bytes()
    eaf_path.write_bytes(data.replace(b'TIME_VALUE="', b'TIME_VALUE="-'))
    report = tmp_path / "report.csv"

    assert cli(["validate", str(corpus_dir), "--report", str(report)]) == 0
    assert f"MISSING_MARKUP,{first}," in report.read_text(encoding="utf-8")
    assert cli(["validate", str(corpus_dir), "--strict"]) == 2


def test_validate_metadata_not_utf8(corpus_dir):
    (corpus_dir / "producer.csv").write_bytes(b"id,name\n1,Op\xe9rator\n")

    assert cli(["validate", str(corpus_dir)]) == 2


def test_build_strict(tmp_path, release_spec):
    faulty = inject_fault(release_spec, FaultKindEnum.MISSING_AUDIO)
    input_dir = make_fixture(faulty, tmp_path / "input")
    output_dir = tmp_path / "release"

    assert cli(["build", str(input_dir), str(output_dir), "--strict"]) == 2
    assert not output_dir.exists()


def test_usage_errors(tmp_path, corpus_dir):
    assert cli(["publish", str(corpus_dir)]) == 1
    assert cli([]) == 1
    assert cli(["build", str(corpus_dir), str(tmp_path), "--workers", "0"]) == 1


def test_missing_input(tmp_path):
    assert cli(["build", str(tmp_path / "absent"), str(tmp_path / "release")]) == 2


def test_stats_csv(tmp_path, corpus_dir, capsys):
    output_dir = tmp_path / "release"
    cli(["build", str(corpus_dir), str(output_dir)])
    capsys.readouterr()

    assert cli(["stats", str(output_dir), "--csv"]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "metric,value"
    assert lines[1] == "conversations,4"
    assert lines[3] == "long_pairs,6"
    assert lines[5] == "short_pairs,10"


def test_stats_text(tmp_path, corpus_dir, capsys):
    output_dir = tmp_path / "release"
    cli(["build", str(corpus_dir), str(output_dir)])
    capsys.readouterr()

    assert cli(["stats", str(output_dir)]) == 0

    assert capsys.readouterr().out.startswith("Conversations")


def test_stats_missing_release(tmp_path):
    assert cli(["stats", str(tmp_path)]) == 2
