import numpy as np
import pytest

from core.exceptions import ChannelError, ConcatError, RangeError
from infrastructure.enums import SideEnum
from infrastructure.schemas.audio import TimeRange, WavBuffer
from services.audio import (
    concat,
    cut,
    extract_channel,
    merge_tracks,
    ms_to_sample,
    pad_to,
    silence,
    silence_from,
)
from tests.fixtures.audio import make_buffer, stereo_buffer  # noqa: F401


def span(start_ms, end_ms):
    return TimeRange(start_ms=start_ms, end_ms=end_ms)


def test_cut_frame_count(stereo_buffer):
    clip = cut(stereo_buffer, span(250, 750))

    assert clip.frames == ms_to_sample(750, 44100) - ms_to_sample(250, 44100)
    assert clip.channels == 2
    start = ms_to_sample(250, 44100)
    expected = stereo_buffer.samples[start : start + clip.frames]
    assert np.array_equal(clip.samples, expected)


def test_cut_random_ranges():
    rng = np.random.default_rng(5)
    for seed in range(50):
        rate = int(rng.choice([8000, 22050, 44100, 48000]))
        buf = make_buffer(rate * 2, sample_rate=rate, seed=seed)
        start = int(rng.integers(0, 1999))
        end = int(rng.integers(start + 1, 2000))

        clip = cut(buf, span(start, end))

        assert clip.frames == ms_to_sample(end, rate) - ms_to_sample(start, rate)


def test_cut_out_of_range(stereo_buffer):
    with pytest.raises(RangeError):
        cut(stereo_buffer, span(500, 1001))


def test_split_rejoin(stereo_buffer):
    rng = np.random.default_rng(9)
    points = sorted(int(point) for point in rng.choice(999, size=4, replace=False) + 1)
    bounds = [0, *points, 1000]

    parts = [cut(stereo_buffer, span(a, b)) for a, b in zip(bounds, bounds[1:])]

    assert concat(parts) == stereo_buffer


def test_extract_channel(stereo_buffer):
    left = extract_channel(stereo_buffer, SideEnum.LEFT)
    right = extract_channel(stereo_buffer, SideEnum.RIGHT)

    assert left.channels == right.channels == 1
    assert np.array_equal(left.samples[:, 0], stereo_buffer.samples[:, 0])
    assert np.array_equal(right.samples[:, 0], stereo_buffer.samples[:, 1])


def test_extract_channel_errors(stereo_buffer):
    mono = make_buffer(100, channels=1)

    with pytest.raises(ChannelError):
        extract_channel(mono, SideEnum.LEFT)
    with pytest.raises(ChannelError):
        extract_channel(stereo_buffer, SideEnum.MIXED)


def test_concat_errors():
    with pytest.raises(ConcatError):
        concat([])
    with pytest.raises(ConcatError):
        concat([make_buffer(10), make_buffer(10, channels=1)])
    with pytest.raises(ConcatError):
        concat([make_buffer(10), make_buffer(10, sample_rate=48000)])


def test_concat_frames():
    parts = [make_buffer(frames, seed=frames) for frames in (5, 0, 17)]

    assert concat(parts).frames == 22


def test_silence(stereo_buffer):
    silenced = silence(stereo_buffer, span(100, 200))
    start, end = ms_to_sample(100, 44100), ms_to_sample(200, 44100)

    assert not silenced.samples[start:end].any()
    assert np.array_equal(silenced.samples[:start], stereo_buffer.samples[:start])
    assert np.array_equal(silenced.samples[end:], stereo_buffer.samples[end:])
    # The source buffer is immutable.
    assert stereo_buffer.samples[start:end].any()


def test_silence_from_reaches_last_frame():
    # 20 frames past the last whole millisecond.
    buf = make_buffer(ms_to_sample(1000, 44100) + 20)
    start = ms_to_sample(950, 44100)

    silenced = silence_from(buf, 950)

    assert silenced.frames == buf.frames
    assert not silenced.samples[start:].any()
    assert np.array_equal(silenced.samples[:start], buf.samples[:start])


def test_pad_to():
    buf = make_buffer(10, channels=1)

    padded = pad_to(buf, 15)

    assert padded.frames == 15
    assert not padded.samples[10:].any()
    with pytest.raises(RangeError):
        pad_to(buf, 9)


def test_merge_tracks():
    left = make_buffer(100, channels=1, seed=1)
    right = make_buffer(80, channels=1, seed=2)

    merged = merge_tracks(left, right)

    assert merged.channels == 2
    assert merged.frames == 100
    assert np.array_equal(merged.samples[:, 0], left.samples[:, 0])
    assert np.array_equal(merged.samples[:80, 1], right.samples[:, 0])
    assert not merged.samples[80:, 1].any()


def test_merge_tracks_errors():
    with pytest.raises(ChannelError):
        merge_tracks(make_buffer(10), make_buffer(10, channels=1))
    with pytest.raises(ConcatError):
        merge_tracks(
            make_buffer(10, channels=1),
            make_buffer(10, channels=1, sample_rate=8000),
        )


def test_wav_buffer_flat_samples():
    buf = WavBuffer(sample_rate=8000, channels=2, samples=[1, 2, 3, 4])

    assert buf.frames == 2
    assert buf.samples.tolist() == [[1, 2], [3, 4]]
    assert buf.interleaved.tolist() == [1, 2, 3, 4]
