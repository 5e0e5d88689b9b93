"""WAV encoding: header bytes, sizes, scaling, stdlib round-trip."""

from __future__ import annotations

import io
import struct
import wave

import numpy as np
import pytest

from xenakis.synth import AudioLoop
from xenakis.wavio import encode_wav, pcm16


def loop_of(samples, rate=44100):
    return AudioLoop(samples=np.asarray(samples, dtype=np.float64), sample_rate=rate, bpm=120.0, steps=16)


def test_file_size_and_header_fields():
    data = encode_wav(loop_of(np.zeros(88200)))
    assert len(data) == 176444
    riff, chunk_size, wave_tag = struct.unpack_from("<4sI4s", data, 0)
    assert riff == b"RIFF" and wave_tag == b"WAVE"
    assert chunk_size == 36 + 176400
    fmt_tag, fmt_size, audio_fmt, channels, rate, byte_rate, block_align, bits = struct.unpack_from(
        "<4sIHHIIHH", data, 12
    )
    assert fmt_tag == b"fmt " and fmt_size == 16
    assert audio_fmt == 1 and channels == 1 and bits == 16
    assert rate == 44100 and byte_rate == 88200 and block_align == 2
    data_tag, data_size = struct.unpack_from("<4sI", data, 36)
    assert data_tag == b"data" and data_size == 176400


def test_silence_encodes_to_zero_bytes():
    data = encode_wav(loop_of(np.zeros(1000)))
    assert data[44:] == b"\x00" * 2000


@pytest.mark.parametrize(
    "value,expected",
    [
        (1.0, 32767),
        (-1.0, -32767),
        (0.0, 0),
        (0.5, 16384),  # 16383.5 rounds half away from zero
        (-0.5, -16384),
        (1.0 / 32767.0, 1),
    ],
)
def test_scaling_rounds_half_away_from_zero(value, expected):
    assert int(pcm16(np.array([value]))[0]) == expected


def test_out_of_range_input_clipped():
    assert int(pcm16(np.array([2.0]))[0]) == 32767
    assert int(pcm16(np.array([-2.0]))[0]) == -32767


def test_stdlib_wave_reads_it_back():
    samples = np.sin(np.linspace(0.0, 40.0 * np.pi, 4410))
    data = encode_wav(loop_of(samples, rate=22050))
    with wave.open(io.BytesIO(data)) as reader:
        assert reader.getnchannels() == 1
        assert reader.getsampwidth() == 2
        assert reader.getframerate() == 22050
        assert reader.getnframes() == 4410
        frames = reader.readframes(4410)
    assert frames == pcm16(samples).tobytes()
