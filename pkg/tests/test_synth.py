"""Voice synthesis and loop rendering: determinism, lengths, spectra."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from xenakis.errors import InvalidTempo, MissingFrequency
from xenakis.histogram import NormalizedHistogram
from xenakis.rhythm import histogram_to_pattern
from xenakis.synth import (
    DEFAULT_VOICES,
    VoiceParams,
    noise,
    render_loop,
    render_voice,
    step_seconds,
)


def pattern_from_values(values):
    return histogram_to_pattern(NormalizedHistogram(values=tuple(values), source_total_m=1.0))


def grid_pattern():
    values = [0.0] * 16
    values[0] = values[8] = 1.0
    values[4] = values[12] = 0.5
    return pattern_from_values(values)


class TestNoise:
    def test_deterministic(self):
        assert np.array_equal(noise(512, seed=99), noise(512, seed=99))

    def test_seed_changes_stream(self):
        assert not np.array_equal(noise(512, seed=1), noise(512, seed=2))

    def test_range(self):
        buf = noise(4096)
        assert float(np.max(np.abs(buf))) < 1.0
        assert abs(float(np.mean(buf))) < 0.05  # roughly centered


class TestRenderVoice:
    def test_zero_gain_all_zero(self):
        params = VoiceParams(decay_s=0.05, gain=0.0, highpass_hz=6500.0)
        buf = render_voice("hat", params, None, 0.125, 44100)
        assert np.count_nonzero(buf) == 0

    def test_hat_buffer_length_and_decaying_rms(self):
        buf = render_voice("hat", DEFAULT_VOICES["hat"], None, 0.125, 44100)
        assert len(buf) == 5513
        quarters = np.array_split(buf, 4)
        rms = [float(np.sqrt(np.mean(q**2))) for q in quarters]
        assert rms[0] > rms[1] > rms[2] > rms[3]

    def test_bass_spectral_peak_at_55(self):
        buf = render_voice("bass", DEFAULT_VOICES["bass"], 55.0, 0.5, 44100)
        spectrum = np.abs(np.fft.rfft(buf))
        peak_hz = float(np.argmax(spectrum)) * 44100 / len(buf)
        assert abs(peak_hz - 55.0) <= 1.0

    def test_bass_requires_frequency(self):
        with pytest.raises(MissingFrequency):
            render_voice("bass", DEFAULT_VOICES["bass"], None, 0.5, 44100)

    def test_unknown_instrument(self):
        with pytest.raises(ValueError):
            render_voice("cowbell", VoiceParams(), None, 0.1, 44100)

    @pytest.mark.parametrize("instrument,freq", [("kick", None), ("snare", None), ("hat", None), ("bass", 82.41)])
    def test_peak_bounded_by_gain(self, instrument, freq):
        params = DEFAULT_VOICES[instrument]
        buf = render_voice(instrument, params, freq, 0.25, 44100)
        assert float(np.max(np.abs(buf))) <= params.gain + 1e-12

    def test_kick_identical_across_calls(self):
        a = render_voice("kick", DEFAULT_VOICES["kick"], None, 0.3, 44100)
        b = render_voice("kick", DEFAULT_VOICES["kick"], None, 0.3, 44100)
        assert np.array_equal(a, b)

    def test_gain_validation(self):
        with pytest.raises(ValueError):
            VoiceParams(gain=1.5)


class TestRenderLoop:
    def test_length_at_defaults(self):
        loop = render_loop(grid_pattern(), bpm=120.0, sample_rate=44100)
        assert len(loop.samples) == 88200
        assert loop.steps == 16

    def test_all_rest_is_exact_silence(self):
        loop = render_loop(pattern_from_values([0.0] * 16))
        assert np.count_nonzero(loop.samples) == 0
        assert float(np.sqrt(np.mean(loop.samples**2))) == 0.0

    def test_deterministic(self):
        a = render_loop(grid_pattern())
        b = render_loop(grid_pattern())
        assert np.array_equal(a.samples, b.samples)

    def test_limiter_bounds_hot_mix(self):
        hot = {
            name: VoiceParams(
                attack_s=p.attack_s, decay_s=p.decay_s, gain=1.0,
                pitch_start_hz=p.pitch_start_hz, pitch_end_hz=p.pitch_end_hz,
                pitch_decay_s=p.pitch_decay_s, highpass_hz=p.highpass_hz,
            )
            for name, p in DEFAULT_VOICES.items()
        }
        loop = render_loop(pattern_from_values([1.0] * 16), voices=hot)
        peak = float(np.max(np.abs(loop.samples)))
        assert peak <= 1.0

    def test_wrap_seamless(self):
        loop = render_loop(grid_pattern())
        s = loop.samples
        junction = abs(float(s[0] - s[-1]))
        largest_internal = float(np.max(np.abs(np.diff(s))))
        assert junction <= largest_internal

    def test_tail_wraps_to_start(self):
        # one hit on the last step: its ring must fold back into the head
        values = [0.0] * 16
        values[7] = values[15] = 1.0
        loop = render_loop(pattern_from_values(values))
        head = loop.samples[: len(loop.samples) // 16]
        assert float(np.max(np.abs(head))) > 0.0

    def test_half_turn_halves_length(self):
        loop = render_loop(grid_pattern(), half_turn=True)
        assert loop.steps == 8
        assert len(loop.samples) == 44100

    @pytest.mark.parametrize("bpm", [39.9, 300.1, 0.0, -10.0])
    def test_tempo_validation(self, bpm):
        with pytest.raises(InvalidTempo):
            render_loop(grid_pattern(), bpm=bpm)

    @settings(max_examples=25, deadline=None)
    @given(
        st.sampled_from([4, 8, 16, 32]),
        st.floats(min_value=40.0, max_value=300.0),
        st.sampled_from([8000, 22050, 44100, 48000]),
    )
    def test_length_law(self, bins, bpm, rate):
        loop = render_loop(pattern_from_values([1.0] * bins), bpm=bpm, sample_rate=rate)
        assert len(loop.samples) == int(bins * step_seconds(bpm) * rate + 0.5)

    @settings(max_examples=15, deadline=None)
    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=8, max_size=8))
    def test_randomized_mix_within_limits(self, half):
        loop = render_loop(pattern_from_values(list(half) * 2), sample_rate=22050)
        assert float(np.max(np.abs(loop.samples))) <= 1.0


def test_step_seconds():
    assert step_seconds(120.0) == 0.125
    assert step_seconds(60.0) == 0.25
