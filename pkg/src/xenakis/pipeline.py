"""The region-to-music pipeline shared by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass

from .geojson import DEFAULT_STREET_KINDS, ParseResult, explode_segments, parse_feature_collection
from .histogram import (
    DEFAULT_BIN_COUNT,
    NormalizedHistogram,
    OrientationHistogram,
    build_histogram,
    normalize,
)
from .rhythm import MappingConfig, RhythmPattern, histogram_to_pattern
from .synth import DEFAULT_BPM, DEFAULT_SAMPLE_RATE, AudioLoop, render_loop, step_seconds
from .wavio import encode_wav


@dataclass(frozen=True)
class SonifyOutcome:
    parse: ParseResult
    histogram: OrientationHistogram
    normalized: NormalizedHistogram
    pattern: RhythmPattern
    loop: AudioLoop
    wav: bytes

    @property
    def step_seconds(self) -> float:
        return step_seconds(self.loop.bpm)

    @property
    def loop_seconds(self) -> float:
        return self.loop.steps * self.step_seconds


def compass_from_document(
    text: str,
    bins: int = DEFAULT_BIN_COUNT,
    street_filter: frozenset[str] | set[str] | str = DEFAULT_STREET_KINDS,
) -> tuple[OrientationHistogram, NormalizedHistogram, ParseResult]:
    """GeoJSON text to (histogram, normalized histogram, parse summary)."""
    parsed = parse_feature_collection(text)
    segments = explode_segments(parsed.features, street_filter)
    h = build_histogram(segments, bins)
    return h, normalize(h), parsed


def sonify_document(
    text: str,
    bins: int = DEFAULT_BIN_COUNT,
    bpm: float = DEFAULT_BPM,
    sample_rate: int = DEFAULT_SAMPLE_RATE,
    mapping: MappingConfig | None = None,
    street_filter: frozenset[str] | set[str] | str = DEFAULT_STREET_KINDS,
    half_turn: bool = False,
) -> SonifyOutcome:
    """GeoJSON text all the way to a rendered WAV-encoded loop."""
    h, nh, parsed = compass_from_document(text, bins, street_filter)
    pattern: RhythmPattern = histogram_to_pattern(nh, mapping)
    loop = render_loop(pattern, bpm=bpm, sample_rate=sample_rate, mapping=mapping, half_turn=half_turn)
    return SonifyOutcome(
        parse=parsed,
        histogram=h,
        normalized=nh,
        pattern=pattern,
        loop=loop,
        wav=encode_wav(loop),
    )
