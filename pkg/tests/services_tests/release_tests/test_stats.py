import pytest

from core.exceptions import StatsError
from infrastructure.schemas.release import CorpusStats
from services.release import compute_stats, format_stats, mean_seconds, stats_rows
from services.testkit import oracle_pairs
from tests.fixtures.corpus import (  # noqa: F401
    built_release,
    corpus_dir,
    release_spec,
)


@pytest.mark.parametrize(
    "durations, expected",
    [
        ([2000, 2600], 2.3),
        ([], 0.0),
        ([1250], 1.3),
        ([1249], 1.2),
        ([50, 100], 0.1),
    ],
)
def test_mean_seconds(durations, expected):
    assert mean_seconds(durations) == expected


def test_stats_agree_with_brute_force(built_release, release_spec):
    output_dir, _ = built_release

    stats = compute_stats(output_dir)

    assert stats == oracle_pairs(release_spec).stats
    assert stats.conversations == 4
    assert stats.participants == 4
    assert stats.long_pairs == 6
    assert stats.short_pairs == 10


def test_missing_table(built_release):
    output_dir, _ = built_release
    (output_dir / "fragments-short.csv").unlink()

    with pytest.raises(StatsError):
        compute_stats(output_dir)


def test_broken_row(built_release):
    output_dir, _ = built_release
    table = output_dir / "fragments-long.csv"
    lines = table.read_text(encoding="utf-8").splitlines()
    cells = lines[1].split(",")
    cells[1] = "later"
    lines[1] = ",".join(cells)
    table.write_text("\n".join(lines) + "\n", encoding="utf-8")

    with pytest.raises(StatsError):
        compute_stats(output_dir)


def test_stats_rows():
    stats = CorpusStats(
        conversations=2,
        participants=2,
        long_pairs=3,
        mean_long_duration_s=2.3,
        short_pairs=0,
        mean_short_duration_s=0.0,
    )

    assert stats_rows(stats) == [
        ("conversations", "2"),
        ("participants", "2"),
        ("long_pairs", "3"),
        ("mean_long_duration_s", "2.3"),
        ("short_pairs", "0"),
        ("mean_short_duration_s", "0.0"),
    ]
    text = format_stats(stats)
    assert len(text.splitlines()) == 4
    assert "mean 2.3 s" in text
