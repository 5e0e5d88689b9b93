"""Orientation histogram construction, symmetry, and serialization."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from xenakis.errors import InvalidBinCount
from xenakis.geo import GeoPoint, StreetSegment, segment_between
from xenakis.geojson import explode_segments, parse_feature_collection
from xenakis.histogram import (
    bin_center_deg,
    build_histogram,
    histogram_csv,
    histogram_document,
    histogram_json_bytes,
    normalize,
)

REPO_ROOT = Path(__file__).resolve().parent.parent


def synthetic_segment(bearing_deg: float, length_m: float = 1.0) -> StreetSegment:
    return StreetSegment(a=GeoPoint(0, 0), b=GeoPoint(0.001, 0.001), length_m=length_m, bearing_deg=bearing_deg)


segments_strategy = st.lists(
    st.builds(
        synthetic_segment,
        st.floats(min_value=0.0, max_value=180.0, exclude_max=True),
        st.floats(min_value=0.5, max_value=5000.0),
    ),
    max_size=40,
)


def test_empty_input_all_zero():
    h = build_histogram([], 16)
    assert h.bins == (0.0,) * 16
    assert h.bin_width_deg == 22.5


def test_single_north_segment_mirrored():
    h = build_histogram([synthetic_segment(0.0, 100.0)], 16)
    assert h.bins[0] == 100.0 and h.bins[8] == 100.0
    assert sum(h.bins) == 200.0


def test_grid_fixture_bins(grid_text):
    result = parse_feature_collection(grid_text)
    h = build_histogram(explode_segments(result.features), 16)
    assert h.bins[0] == pytest.approx(1000.0, abs=1.0)
    assert h.bins[8] == pytest.approx(1000.0, abs=1.0)
    assert h.bins[4] == pytest.approx(500.0, abs=1.0)
    assert h.bins[12] == pytest.approx(500.0, abs=1.0)
    assert sum(h.bins[i] for i in (1, 2, 3, 5, 6, 7)) == 0.0


def test_grid_fixture_matches_committed_oracle(grid_text):
    """The independent binning script and the library must agree."""
    proc = subprocess.run(
        [sys.executable, str(REPO_ROOT / "tools" / "binning_oracle.py"),
         str(REPO_ROOT / "fixtures" / "grid_city.geojson"), "--bins", "16"],
        capture_output=True, text=True, check=True,
    )
    oracle_bins = json.loads(proc.stdout)["bins"]
    result = parse_feature_collection(grid_text)
    h = build_histogram(explode_segments(result.features), 16)
    assert h.bins == pytest.approx(oracle_bins, abs=1e-6)


@pytest.mark.parametrize(
    "bearing,expected_bin",
    [
        (11.24, 0),  # just inside the north-centered bin
        (11.26, 1),  # just across the edge
        (0.0, 0),
        (90.0, 4),
        (170.0, 0),  # folds around the top of the half-circle
        (168.74, 7),
        (168.75, 0),
    ],
)
def test_bin_center_convention(bearing, expected_bin):
    h = build_histogram([synthetic_segment(bearing, 7.0)], 16)
    assert h.bins[expected_bin] == 7.0
    assert h.bins[expected_bin + 8] == 7.0


@pytest.mark.parametrize("bad", [0, 2, 3, 7, 15, -4])
def test_invalid_bin_count(bad):
    with pytest.raises(InvalidBinCount):
        build_histogram([], bad)


@given(segments_strategy, st.sampled_from([4, 8, 16, 32]))
def test_symmetry_exact(segments, bins):
    h = build_histogram(segments, bins)
    half = bins // 2
    for i in range(half):
        assert h.bins[i] == h.bins[i + half]


@given(segments_strategy)
def test_mass_conservation(segments):
    h = build_histogram(segments, 16)
    total = sum(s.length_m for s in segments)
    assert sum(h.bins) == pytest.approx(2.0 * total, rel=1e-6, abs=1e-9)


@given(segments_strategy, st.floats(min_value=1e-3, max_value=1e3))
def test_scale_equivariance_of_normalized(segments, c):
    scaled = [
        StreetSegment(a=s.a, b=s.b, length_m=s.length_m * c, bearing_deg=s.bearing_deg)
        for s in segments
    ]
    base = normalize(build_histogram(segments, 16)).values
    rescaled = normalize(build_histogram(scaled, 16)).values
    assert rescaled == pytest.approx(base, abs=1e-12)


def test_reversal_invariance_through_segments():
    pts = [(GeoPoint(48.2 + i * 0.001, 16.3), GeoPoint(48.2, 16.3 + i * 0.0007)) for i in range(1, 9)]
    fwd = build_histogram([segment_between(a, b) for a, b in pts], 16)
    rev = build_histogram([segment_between(b, a) for a, b in pts], 16)
    assert fwd.bins == rev.bins


class TestNormalize:
    def test_all_zero_stays_zero(self):
        nh = normalize(build_histogram([], 16))
        assert nh.values == (0.0,) * 16
        assert nh.source_total_m == 0.0

    def test_division_by_max(self):
        segments = [synthetic_segment(0.0, 2.0), synthetic_segment(22.5, 1.0)]
        nh = normalize(build_histogram(segments, 16))
        assert nh.values[0] == 1.0 and nh.values[8] == 1.0
        assert nh.values[1] == 0.5 and nh.values[9] == 0.5
        assert nh.source_total_m == pytest.approx(3.0)

    def test_grid_fixture_values(self, grid_text):
        result = parse_feature_collection(grid_text)
        nh = normalize(build_histogram(explode_segments(result.features), 16))
        assert nh.values[0] == 1.0 and nh.values[8] == 1.0
        assert nh.values[4] == pytest.approx(0.5, abs=1e-3)
        assert nh.values[12] == pytest.approx(0.5, abs=1e-3)


class TestSerialization:
    def test_document_fields(self, grid_text):
        result = parse_feature_collection(grid_text)
        h = build_histogram(explode_segments(result.features), 16)
        doc = histogram_document(h, normalize(h))
        assert set(doc) == {"bin_count", "bin_width_deg", "bins", "values", "source_total_m"}
        assert doc["bin_count"] == 16
        assert len(doc["bins"]) == len(doc["values"]) == 16

    def test_json_bytes_stable(self):
        doc = {"bin_count": 4, "bins": [0.0] * 4, "values": [0.0] * 4, "bin_width_deg": 90.0, "source_total_m": 0.0}
        assert histogram_json_bytes(doc) == histogram_json_bytes(dict(reversed(doc.items())))

    def test_csv_layout(self):
        h = build_histogram([synthetic_segment(0.0, 2.0)], 4)
        text = histogram_csv(h, normalize(h))
        lines = text.splitlines()
        assert lines[0] == "bin_index,center_deg,weight_m,normalized"
        assert len(lines) == 5
        assert lines[1].startswith("0,0.0,2.0,1.0")

    def test_bin_centers(self):
        h = build_histogram([], 16)
        assert bin_center_deg(h, 0) == 0.0
        assert bin_center_deg(h, 4) == 90.0
        assert bin_center_deg(h, 8) == 180.0
