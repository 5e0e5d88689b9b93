"""Drum and bass voice synthesis and pattern-to-loop rendering.

Four voices, all computed from scratch: a pitch-dropping sine kick, noise
snare and hat shaped by one-pole high-pass filters, and an additive
band-limited sawtooth bass. Noise comes from a seeded xorshift generator
owned by this module, so a loop renders byte-identically on every run and
platform. Voice tails that would run past the loop end wrap around to the
start, which keeps back-to-back repetitions of the loop seamless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTempo, MissingFrequency
from .rhythm import MappingConfig, RhythmPattern

DEFAULT_SAMPLE_RATE = 44_100
DEFAULT_BPM = 120.0
DEFAULT_NOISE_SEED = 0x5EED_1E55
BPM_MIN, BPM_MAX = 40.0, 300.0

# envelope is considered silent after this many decay time constants
RING_DECAYS = 6.0

INSTRUMENTS = ("kick", "snare", "hat", "bass")


@dataclass(frozen=True)
class VoiceParams:
    """Synthesis settings for one voice."""

    attack_s: float = 0.0
    decay_s: float = 0.1  # exponential amplitude time constant
    gain: float = 1.0  # in [0, 1]; a voice buffer never exceeds its gain
    pitch_start_hz: float = 0.0  # kick pitch sweep
    pitch_end_hz: float = 0.0
    pitch_decay_s: float = 0.04
    highpass_hz: float = 0.0  # noise shaping corner for snare/hat
    noise_seed: int = DEFAULT_NOISE_SEED

    def __post_init__(self) -> None:
        if not 0.0 <= self.gain <= 1.0:
            raise ValueError(f"gain {self.gain} outside [0, 1]")
        if self.attack_s < 0.0 or self.decay_s <= 0.0:
            raise ValueError("attack must be >= 0 and decay > 0")

    @property
    def ring_s(self) -> float:
        return self.attack_s + RING_DECAYS * self.decay_s


DEFAULT_VOICES: dict[str, VoiceParams] = {
    "kick": VoiceParams(decay_s=0.09, gain=0.95, pitch_start_hz=150.0, pitch_end_hz=50.0, pitch_decay_s=0.04),
    "snare": VoiceParams(decay_s=0.055, gain=0.5, highpass_hz=1800.0),
    "hat": VoiceParams(decay_s=0.025, gain=0.3, highpass_hz=6500.0),
    "bass": VoiceParams(attack_s=0.004, decay_s=0.16, gain=0.55),
}


@dataclass(frozen=True)
class AudioLoop:
    samples: np.ndarray  # mono float64 in [-1, 1]
    sample_rate: int
    bpm: float
    steps: int


def step_seconds(bpm: float) -> float:
    """Duration of one sixteenth-note step."""
    return 60.0 / (bpm * 4.0)


def noise(n: int, seed: int = DEFAULT_NOISE_SEED) -> np.ndarray:
    """n deterministic white-noise samples in (-1, 1) from xorshift64*."""
    mask = (1 << 64) - 1
    x = (seed & mask) or 0x106689D45497FDB5
    out = np.empty(n, dtype=np.float64)
    for i in range(n):
        x ^= x >> 12
        x = (x ^ (x << 25)) & mask
        x ^= x >> 27
        u = ((x * 0x2545F4914F6CDD1D) & mask) >> 11
        out[i] = u / 4503599627370496.0 - 1.0  # [0, 2^53) -> [-1, 1)
    return out


def _one_pole_highpass(x: np.ndarray, corner_hz: float, sample_rate: int) -> np.ndarray:
    if corner_hz <= 0.0:
        return x
    rc = 1.0 / (2.0 * math.pi * corner_hz)
    dt = 1.0 / sample_rate
    alpha = rc / (rc + dt)
    y = np.empty_like(x)
    prev_y = 0.0
    prev_x = 0.0
    for i in range(len(x)):
        prev_y = alpha * (prev_y + x[i] - prev_x)
        prev_x = x[i]
        y[i] = prev_y
    return y


def _envelope(params: VoiceParams, n: int, sample_rate: int) -> np.ndarray:
    t = np.arange(n, dtype=np.float64) / sample_rate
    env = np.exp(-np.maximum(t - params.attack_s, 0.0) / params.decay_s)
    if params.attack_s > 0.0:
        env *= np.minimum(t / params.attack_s, 1.0)
    return env


def _bandlimited_saw(freq: float, n: int, sample_rate: int) -> np.ndarray:
    t = np.arange(n, dtype=np.float64) / sample_rate
    sig = np.zeros(n, dtype=np.float64)
    partials = int((sample_rate / 2.0) // freq)
    for j in range(1, max(1, partials) + 1):
        sig += ((-1.0) ** (j + 1)) / j * np.sin(2.0 * math.pi * j * freq * t)
    return sig * (2.0 / math.pi)


def render_voice(
    instrument: str,
    params: VoiceParams,
    freq: float | None,
    dur: float,
    sample_rate: int = DEFAULT_SAMPLE_RATE,
) -> np.ndarray:
    """Render one voice hit as a float buffer with peak <= params.gain."""
    if dur <= 0.0:
        raise ValueError(f"dur must be > 0, got {dur}")
    n = int(dur * sample_rate + 0.5)
    if params.gain == 0.0 or n == 0:
        return np.zeros(n, dtype=np.float64)

    if instrument == "kick":
        t = np.arange(n, dtype=np.float64) / sample_rate
        f0, f1, tau = params.pitch_start_hz, params.pitch_end_hz, params.pitch_decay_s
        phase = 2.0 * math.pi * (f1 * t + (f0 - f1) * tau * (1.0 - np.exp(-t / tau)))
        sig = np.sin(phase)
    elif instrument in ("snare", "hat"):
        sig = _one_pole_highpass(noise(n, params.noise_seed), params.highpass_hz, sample_rate)
    elif instrument == "bass":
        if freq is None:
            raise MissingFrequency("bass voice needs a frequency")
        sig = _bandlimited_saw(freq, n, sample_rate)
    else:
        raise ValueError(f"unknown instrument {instrument!r}")

    # unit-peak waveform, then envelope and gain, keeps the buffer <= gain
    peak = float(np.max(np.abs(sig)))
    if peak > 1.0:
        sig = sig / peak
    return sig * _envelope(params, n, sample_rate) * params.gain


def render_loop(
    pattern: RhythmPattern,
    bpm: float = DEFAULT_BPM,
    sample_rate: int = DEFAULT_SAMPLE_RATE,
    mapping: MappingConfig | None = None,
    voices: dict[str, VoiceParams] | None = None,
    half_turn: bool = False,
) -> AudioLoop:
    """Mix a pattern into one seamless loop.

    Steps are sixteenth notes; the loop is round(steps * step_seconds *
    sample_rate) samples long. half_turn plays only the first half of the
    compass (the pattern repeats there anyway by symmetry). The mix order
    is fixed (steps ascending, kick/snare/hat/bass within a step) so output
    is byte-stable.
    """
    if not BPM_MIN <= bpm <= BPM_MAX:
        raise InvalidTempo(f"bpm {bpm} outside [{BPM_MIN:.0f}, {BPM_MAX:.0f}]")
    if pattern.bin_count < 4:
        raise ValueError(f"pattern needs >= 4 steps, got {pattern.bin_count}")
    mapping = mapping or MappingConfig()
    voices = voices or DEFAULT_VOICES

    steps_played = pattern.bin_count // 2 if half_turn else pattern.bin_count
    sec = step_seconds(bpm)
    if int(sec * sample_rate) < 1:
        raise ValueError(f"sample_rate {sample_rate} gives sub-sample steps at {bpm} bpm")
    total = int(steps_played * sec * sample_rate + 0.5)
    mix = np.zeros(total, dtype=np.float64)

    max_ring = min(4.0, float(steps_played)) * sec  # a voice may ring at most 4 steps
    rendered: dict[tuple[str, float | None], np.ndarray] = {}

    for i in range(steps_played):
        step = pattern.steps[i]
        if step.level == 0:
            continue
        onset = int(i * sec * sample_rate + 0.5)
        for instrument in INSTRUMENTS:
            if instrument == "bass":
                if step.bass_degree is None:
                    continue
                freq: float | None = mapping.bass_hz[step.bass_degree]
            else:
                if instrument not in step.instruments:
                    continue
                freq = None
            key = (instrument, freq)
            buf = rendered.get(key)
            if buf is None:
                params = voices[instrument]
                dur = min(params.ring_s, max_ring)
                buf = render_voice(instrument, params, freq, dur, sample_rate)
                rendered[key] = buf
            end = onset + len(buf)
            if end <= total:
                mix[onset:end] += buf
            else:
                head = total - onset
                mix[onset:] += buf[:head]
                mix[: end - total] += buf[head:]  # wrap the tail to the loop start

    np.clip(mix, -1.0, 1.0, out=mix)
    return AudioLoop(samples=mix, sample_rate=sample_rate, bpm=bpm, steps=steps_played)
