"""CLI behavior: outputs, artifacts, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest
from fastapi.testclient import TestClient

from xenakis.cli import main
from xenakis.service import create_app

from conftest import FIXTURES, GRID_BBOX, GRID_PATTERN

MALFORMED = sorted((FIXTURES / "malformed").glob("*.geojson"))
GRID = str(FIXTURES / "grid_city.geojson")


def test_euclid_tresillo(capsys):
    assert main(["euclid", "3", "8"]) == 0
    assert capsys.readouterr().out == "x..x..x.\n"


@pytest.mark.parametrize("args", [["euclid", "9", "8"], ["euclid", "1", "0"]])
def test_euclid_bad_arity_is_usage_error(args, capsys):
    assert main(args) == 1


def test_histogram_empty_fixture(capsys):
    assert main(["histogram", "--input", str(FIXTURES / "empty.geojson")]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["bins"] == [0.0] * 16


def test_histogram_csv_format(capsys):
    assert main(["histogram", "--input", GRID, "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "bin_index,center_deg,weight_m,normalized"
    assert len(out.splitlines()) == 17


def test_histogram_matches_service_body(tmp_path, stub_provider_url, capsysbinary):
    assert main(["histogram", "--input", GRID, "--bins", "16"]) == 0
    cli_bytes = capsysbinary.readouterr().out

    app = create_app(provider_url=stub_provider_url, cache_dir=tmp_path / "cache")
    min_lon, min_lat, max_lon, max_lat = GRID_BBOX
    with TestClient(app) as client:
        response = client.get(
            "/v1/histogram",
            params={"min_lon": min_lon, "min_lat": min_lat, "max_lon": max_lon, "max_lat": max_lat},
        )
    assert response.content == cli_bytes


def test_sonify_writes_expected_artifacts(tmp_path, capsys):
    wav = tmp_path / "loop.wav"
    mid = tmp_path / "loop.mid"
    code = main(
        ["sonify", "--input", GRID, "--out", str(wav), "--midi", str(mid), "--pattern", "-"]
    )
    assert code == 0
    assert capsys.readouterr().out == GRID_PATTERN + "\n"
    assert wav.stat().st_size == 176444
    assert wav.read_bytes()[:4] == b"RIFF"
    assert mid.read_bytes()[:4] == b"MThd"


def test_sonify_pattern_to_file(tmp_path):
    wav = tmp_path / "loop.wav"
    pattern_path = tmp_path / "pattern.txt"
    assert main(["sonify", "--input", GRID, "--out", str(wav), "--pattern", str(pattern_path)]) == 0
    assert pattern_path.read_text().strip() == GRID_PATTERN


def test_sonify_empty_is_silent_success(tmp_path):
    wav = tmp_path / "loop.wav"
    assert main(["sonify", "--input", str(FIXTURES / "empty.geojson"), "--out", str(wav)]) == 0
    data = wav.read_bytes()
    assert data[44:] == b"\x00" * (len(data) - 44)


def test_sonify_half_turn(tmp_path):
    wav = tmp_path / "half.wav"
    assert main(["sonify", "--input", GRID, "--out", str(wav), "--half"]) == 0
    assert wav.stat().st_size == 44 + 2 * 44100  # 8 steps at defaults


@pytest.mark.parametrize("path", MALFORMED, ids=lambda p: p.stem)
def test_malformed_inputs_exit_2(path, tmp_path, capsys):
    assert main(["histogram", "--input", str(path)]) == 2
    assert main(["sonify", "--input", str(path), "--out", str(tmp_path / "x.wav")]) == 2


def test_missing_input_file_exit_2(tmp_path):
    assert main(["histogram", "--input", str(tmp_path / "nope.geojson")]) == 2


def test_json_errors_flag(capsys):
    code = main(["--json-errors", "histogram", "--input", str(MALFORMED[0])])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["exit_code"] == 2
    assert err["error"] == "malformed_document"


@pytest.mark.parametrize(
    "args",
    [
        ["frobnicate"],
        ["histogram"],  # missing --input
        ["fetch", "--bbox", "1,2,3", "--out", "x", "--provider", "http://x"],
        ["fetch", "--bbox", "3,2,1,0", "--out", "x", "--provider", "http://x"],
        ["histogram", "--input", GRID, "--bins", "7"],
        ["sonify", "--input", GRID, "--out", "x.wav", "--bpm", "500"],
    ],
)
def test_usage_errors_exit_1(args, capsys):
    assert main(args) == 1


def test_fetch_against_stub(tmp_path, stub_provider_url):
    out = tmp_path / "region.geojson"
    bbox = ",".join(str(v) for v in GRID_BBOX)
    code = main(
        ["fetch", "--bbox", bbox, "--out", str(out), "--provider", stub_provider_url,
         "--cache-dir", str(tmp_path / "cache")]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["features"]) == 15


def test_fetch_unreachable_provider_exit_3(tmp_path):
    code = main(
        ["fetch", "--bbox", "16.37,48.2,16.38,48.21", "--out", str(tmp_path / "r.geojson"),
         "--provider", "http://127.0.0.1:9/api", "--cache-dir", str(tmp_path / "cache")]
    )
    assert code == 3


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "xenakis.cli", "euclid", "5", "8"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "x.xx.xx.\n"
