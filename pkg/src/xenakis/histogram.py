"""The musical compass: a symmetric circular histogram of street bearings.

Bin 0 is centered on true north and bins proceed clockwise; each segment's
length in meters is written to its half-circle bin and to the mirror bin
half a turn away, so the histogram is symmetric under 180 degree rotation
by construction.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .errors import InvalidBinCount
from .geo import StreetSegment

DEFAULT_BIN_COUNT = 16


@dataclass(frozen=True)
class OrientationHistogram:
    bins: tuple[float, ...]  # meters of street per angular bin
    bin_count: int
    bin_width_deg: float


@dataclass(frozen=True)
class NormalizedHistogram:
    values: tuple[float, ...]  # in [0, 1], max is 1 unless all bins are zero
    source_total_m: float


def _check_bin_count(bin_count: int) -> None:
    if not isinstance(bin_count, int) or bin_count < 4 or bin_count % 2 != 0:
        raise InvalidBinCount(f"bin count must be an even integer >= 4, got {bin_count!r}")


def build_histogram(segments: list[StreetSegment], bin_count: int = DEFAULT_BIN_COUNT) -> OrientationHistogram:
    """Accumulate length-weighted folded bearings into bin_count circular bins."""
    _check_bin_count(bin_count)
    bin_width = 360.0 / bin_count
    half = bin_count // 2
    bins = [0.0] * bin_count
    for seg in segments:
        # shift by half a bin so bin 0 is centered (not edged) on north
        i = int(math.fmod(seg.bearing_deg + bin_width / 2.0, 180.0) // bin_width)
        bins[i] += seg.length_m
        bins[i + half] += seg.length_m
    return OrientationHistogram(bins=tuple(bins), bin_count=bin_count, bin_width_deg=bin_width)


def normalize(h: OrientationHistogram) -> NormalizedHistogram:
    """Scale bins so the largest is 1.0; an all-zero histogram stays zero."""
    peak = max(h.bins) if h.bins else 0.0
    if peak <= 0.0:
        values = tuple(0.0 for _ in h.bins)
    else:
        values = tuple(b / peak for b in h.bins)
    # each segment was written to two bins, so total mass is twice the streets
    return NormalizedHistogram(values=values, source_total_m=sum(h.bins) / 2.0)


def bin_center_deg(h: OrientationHistogram, index: int) -> float:
    return (index * h.bin_width_deg) % 360.0


def histogram_document(h: OrientationHistogram, nh: NormalizedHistogram) -> dict:
    """The flat record shared by the CLI and the HTTP service."""
    return {
        "bin_count": h.bin_count,
        "bin_width_deg": h.bin_width_deg,
        "bins": list(h.bins),
        "values": list(nh.values),
        "source_total_m": nh.source_total_m,
    }


def histogram_json_bytes(doc: dict) -> bytes:
    """Canonical JSON encoding; CLI and service bodies must be byte-identical."""
    return (json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n").encode("utf-8")


def histogram_csv(h: OrientationHistogram, nh: NormalizedHistogram) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["bin_index", "center_deg", "weight_m", "normalized"])
    for i in range(h.bin_count):
        writer.writerow([i, bin_center_deg(h, i), h.bins[i], nh.values[i]])
    return out.getvalue()
