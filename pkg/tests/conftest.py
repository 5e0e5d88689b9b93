"""Shared fixtures: fixture file paths, a live stub provider, service clients."""

from __future__ import annotations

from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"

# The grid city fixture sits just west of Vienna's center; the four-street
# block is ~1.5 km east. These boxes select one without the other.
GRID_BBOX = (16.3720, 48.2070, 16.3770, 48.2090)
BLOCK_BBOX = (16.3915, 48.2050, 16.3935, 48.2065)
OCEAN_BBOX = (-30.0, -10.0, -29.9, -9.9)

GRID_PATTERN = "X...H...X...H..."


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def grid_text() -> str:
    return (FIXTURES / "grid_city.geojson").read_text("utf-8")


@pytest.fixture(scope="session")
def stub_provider_url():
    from xenakis.stub_provider import serve_fixture

    server = serve_fixture(str(FIXTURES / "stub_world.geojson"), port=0)
    port = server.server_address[1]
    yield f"http://127.0.0.1:{port}/geojson"
    server.shutdown()


@pytest.fixture()
def service_client(stub_provider_url, tmp_path):
    from fastapi.testclient import TestClient

    from xenakis.service import create_app

    app = create_app(provider_url=stub_provider_url, cache_dir=tmp_path / "cache")
    with TestClient(app) as client:
        yield client
