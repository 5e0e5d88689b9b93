"""Compass-to-sequencer mapping plus Euclidean rhythm reference tools.

The compass value of each bin picks an intensity level; levels pick drum
voices and an optional bass degree through fixed tables. Bjorklund's
algorithm and the evenness metric live here as the theoretical reference
class the generated patterns are compared against; they are not part of
the sonification path itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidArity, OutOfRange, TooFewOnsets
from .histogram import NormalizedHistogram

# Intensity levels, least to most intense. Level 0 is a rest.
LEVEL_INSTRUMENTS: tuple[frozenset[str], ...] = (
    frozenset(),
    frozenset({"hat"}),
    frozenset({"hat", "snare"}),
    frozenset({"kick", "snare", "hat"}),
)

# A-minor pentatonic bass pitches for degrees 0..4: A1 C2 D2 E2 G2.
PENTATONIC_HZ: tuple[float, ...] = (55.0, 65.41, 73.42, 82.41, 98.0)
PENTATONIC_MIDI: tuple[int, ...] = (33, 36, 38, 40, 43)

LEVEL_CHARS = ".hHX"

DEFAULT_THRESHOLDS = (0.05, 0.35, 0.70)


@dataclass(frozen=True)
class MappingConfig:
    """Knobs of the value-to-sound mapping."""

    thresholds: tuple[float, float, float] = DEFAULT_THRESHOLDS
    bass_hz: tuple[float, ...] = PENTATONIC_HZ

    def __post_init__(self) -> None:
        t1, t2, t3 = self.thresholds
        if not 0.0 < t1 < t2 < t3 <= 1.0:
            raise ValueError(f"thresholds must be strictly increasing in (0, 1], got {self.thresholds}")
        if len(self.bass_hz) != 5 or any(f <= 0 for f in self.bass_hz):
            raise ValueError("bass_hz must be 5 positive frequencies")


@dataclass(frozen=True)
class Step:
    level: int
    instruments: frozenset[str]
    bass_degree: int | None


@dataclass(frozen=True)
class RhythmPattern:
    steps: tuple[Step, ...]
    bin_count: int


@dataclass(frozen=True)
class OnsetPattern:
    n: int
    onsets: frozenset[int]


def quantize(w: float, thresholds: tuple[float, float, float] = DEFAULT_THRESHOLDS) -> int:
    """Map a normalized weight in [0, 1] to an intensity level 0..3."""
    if not 0.0 <= w <= 1.0:
        raise OutOfRange(f"normalized weight {w} outside [0, 1]")
    t1, t2, t3 = thresholds
    if w < t1:
        return 0
    if w < t2:
        return 1
    if w < t3:
        return 2
    return 3


def histogram_to_pattern(nh: NormalizedHistogram, mapping: MappingConfig | None = None) -> RhythmPattern:
    """One step per compass bin: level from the value, voices from the level.

    Bass sounds at level 2 (degree 1, the minor third) and at level 3 with
    a degree tracking the bin value, so stronger orientations walk higher
    up the pentatonic scale.
    """
    mapping = mapping or MappingConfig()
    steps = []
    for value in nh.values:
        level = quantize(value, mapping.thresholds)
        if level == 2:
            degree: int | None = 1
        elif level == 3:
            degree = min(4, max(0, int(value * 4.0)))
        else:
            degree = None
        steps.append(Step(level=level, instruments=LEVEL_INSTRUMENTS[level], bass_degree=degree))
    return RhythmPattern(steps=tuple(steps), bin_count=len(steps))


def bjorklund(k: int, n: int) -> OnsetPattern:
    """The Euclidean rhythm E(k, n): k onsets spread as evenly as possible.

    Uses the Bjorklund grouping recursion, then rotates so step 0 carries
    an onset whenever k > 0.
    """
    if n < 1 or k < 0 or k > n:
        raise InvalidArity(f"need 0 <= k <= n and n >= 1, got k={k} n={n}")
    if k == 0:
        return OnsetPattern(n=n, onsets=frozenset())

    groups = [[True] for _ in range(k)]
    remainder = [[False] for _ in range(n - k)]
    while len(remainder) > 1:
        take = min(len(groups), len(remainder))
        for i in range(take):
            groups[i].extend(remainder[i])
        leftover = groups[take:] if take < len(groups) else remainder[take:]
        groups = groups[:take]
        remainder = leftover
    flat = [bit for group in groups for bit in group]
    flat.extend(bit for group in remainder for bit in group)

    first = flat.index(True)
    onsets = frozenset((i - first) % n for i, bit in enumerate(flat) if bit)
    return OnsetPattern(n=n, onsets=onsets)


def evenness(p: OnsetPattern) -> float:
    """Sum of pairwise chord lengths of the onsets placed on the unit circle."""
    if len(p.onsets) < 2:
        raise TooFewOnsets(f"evenness needs >= 2 onsets, got {len(p.onsets)}")
    total = 0.0
    for i, j in combinations(sorted(p.onsets), 2):
        total += 2.0 * math.sin(math.pi * (j - i) / p.n)
    return total


def pattern_period(p: RhythmPattern) -> int:
    """Smallest divisor d of the step count with steps[i] == steps[i mod d]."""
    n = p.bin_count
    for d in range(1, n + 1):
        if n % d != 0:
            continue
        if all(p.steps[i] == p.steps[i % d] for i in range(n)):
            return d
    return n


def pattern_text(p: RhythmPattern) -> str:
    """Compact one-character-per-step form: '.' 'h' 'H' 'X' for levels 0-3."""
    return "".join(LEVEL_CHARS[s.level] for s in p.steps)


def onset_text(p: OnsetPattern) -> str:
    return "".join("x" if i in p.onsets else "." for i in range(p.n))


def pattern_document(p: RhythmPattern) -> dict:
    return {
        "bin_count": p.bin_count,
        "steps": [
            {
                "level": s.level,
                "instruments": sorted(s.instruments),
                "bass_degree": s.bass_degree,
            }
            for s in p.steps
        ],
    }
