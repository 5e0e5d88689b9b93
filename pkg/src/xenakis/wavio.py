"""WAV encoding: mono 16-bit PCM RIFF files.

Header layout (44 bytes, all little-endian):

    offset  size  field
    0       4     "RIFF"
    4       4     chunk size = 36 + data bytes
    8       4     "WAVE"
    12      4     "fmt "
    16      4     16 (PCM fmt chunk size)
    20      2     1  (PCM)
    22      2     1  (channels)
    24      4     sample rate
    28      4     byte rate = sample rate * 2
    32      2     2  (block align)
    34      2     16 (bits per sample)
    36      4     "data"
    40      4     data bytes = 2 * sample count

Floats are scaled by 32767 and rounded half away from zero.
"""

from __future__ import annotations

import struct

import numpy as np

from .synth import AudioLoop


def pcm16(samples: np.ndarray) -> np.ndarray:
    clipped = np.clip(samples, -1.0, 1.0)
    scaled = clipped * 32767.0
    return np.trunc(scaled + np.copysign(0.5, scaled)).astype("<i2")


def encode_wav(loop: AudioLoop) -> bytes:
    data = pcm16(loop.samples).tobytes()
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF",
        36 + len(data),
        b"WAVE",
        b"fmt ",
        16,
        1,  # PCM
        1,  # mono
        loop.sample_rate,
        loop.sample_rate * 2,
        2,
        16,
        b"data",
        len(data),
    )
    return header + data
