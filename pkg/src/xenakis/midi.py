"""Standard MIDI file (format 0) export of rhythm patterns.

480 ticks per quarter note, one step = 120 ticks (a sixteenth). Drums go
to channel 10 with General MIDI keys (kick 36, snare 38, hat 42); the bass
goes to channel 1 with pitches from the pentatonic table.
"""

from __future__ import annotations

import struct

from .rhythm import PENTATONIC_MIDI, RhythmPattern

TICKS_PER_QUARTER = 480
TICKS_PER_STEP = 120
DRUM_CHANNEL = 9  # MIDI channel 10
BASS_CHANNEL = 0  # MIDI channel 1
DRUM_KEYS = {"kick": 36, "snare": 38, "hat": 42}
DRUM_VELOCITY = 100
BASS_VELOCITY = 90
DRUM_TICKS = 60
BASS_TICKS = TICKS_PER_STEP


def _vlq(value: int) -> bytes:
    out = bytearray([value & 0x7F])
    value >>= 7
    while value > 0:
        out.insert(0, 0x80 | (value & 0x7F))
        value >>= 7
    return bytes(out)


def encode_midi(pattern: RhythmPattern, bpm: float = 120.0) -> bytes:
    # (tick, order, message): note-offs sort before note-ons at equal ticks
    events: list[tuple[int, int, bytes]] = []
    tempo = round(60_000_000 / bpm)
    events.append((0, 0, bytes([0xFF, 0x51, 0x03]) + tempo.to_bytes(3, "big")))

    for i, step in enumerate(pattern.steps):
        tick = i * TICKS_PER_STEP
        for name in ("kick", "snare", "hat"):
            if name in step.instruments:
                key = DRUM_KEYS[name]
                events.append((tick, 1, bytes([0x90 | DRUM_CHANNEL, key, DRUM_VELOCITY])))
                events.append((tick + DRUM_TICKS, 0, bytes([0x80 | DRUM_CHANNEL, key, 0])))
        if step.bass_degree is not None:
            pitch = PENTATONIC_MIDI[step.bass_degree]
            events.append((tick, 1, bytes([0x90 | BASS_CHANNEL, pitch, BASS_VELOCITY])))
            events.append((tick + BASS_TICKS, 0, bytes([0x80 | BASS_CHANNEL, pitch, 0])))

    events.sort(key=lambda e: (e[0], e[1]))
    end_tick = pattern.bin_count * TICKS_PER_STEP

    track = bytearray()
    cursor = 0
    for tick, _, message in events:
        track += _vlq(tick - cursor) + message
        cursor = tick
    track += _vlq(max(0, end_tick - cursor)) + bytes([0xFF, 0x2F, 0x00])

    header = struct.pack(">4sIHHH", b"MThd", 6, 0, 1, TICKS_PER_QUARTER)
    return header + struct.pack(">4sI", b"MTrk", len(track)) + bytes(track)
