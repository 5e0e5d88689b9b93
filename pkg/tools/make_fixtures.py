#!/usr/bin/env python3
"""Regenerate the GeoJSON fixtures under fixtures/.

The grid city is a perpendicular street grid just west of Vienna's center:
10 north-south residential streets of 100 m and 5 east-west streets of
100 m, so its orientation histogram is exactly two bin pairs (1000 m
north-south, 500 m east-west). Street lengths are solved on the sphere so
they come out at 100 m to within centimeters after coordinate rounding.

Also writes a separate four-street block (with a park polygon and a
fountain point that parsers must skip), the stub-provider world that
contains everything, and an empty collection.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

EARTH_RADIUS_M = 6_371_000.0
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

GRID_ORIGIN_LAT = 48.2075
GRID_ORIGIN_LON = 16.3725
BLOCK_ORIGIN_LAT = 48.2055
BLOCK_ORIGIN_LON = 16.3920


def dlat(meters: float) -> float:
    return math.degrees(meters / EARTH_RADIUS_M)


def dlon(meters: float, at_lat: float) -> float:
    half = math.sin(meters / (2.0 * EARTH_RADIUS_M))
    return math.degrees(2.0 * math.asin(half / math.cos(math.radians(at_lat))))


def street(name: str, coords: list[tuple[float, float]], kind: str = "residential") -> dict:
    return {
        "type": "Feature",
        "properties": {"highway": kind, "name": name},
        "geometry": {
            "type": "LineString",
            "coordinates": [[round(lon, 7), round(lat, 7)] for lon, lat in coords],
        },
    }


def collection(features: list[dict]) -> dict:
    return {"type": "FeatureCollection", "features": features}


def grid_city() -> list[dict]:
    features = []
    for j in range(10):
        lon = GRID_ORIGIN_LON + j * dlon(20.0, GRID_ORIGIN_LAT)
        features.append(
            street(f"North Street {j + 1}", [(lon, GRID_ORIGIN_LAT), (lon, GRID_ORIGIN_LAT + dlat(100.0))])
        )
    for i in range(5):
        lat = GRID_ORIGIN_LAT + i * dlat(25.0)
        features.append(street(f"East Street {i + 1}", [(GRID_ORIGIN_LON, lat), (GRID_ORIGIN_LON + dlon(100.0, lat), lat)]))
    return features


def four_street_block() -> list[dict]:
    lat0, lon0 = BLOCK_ORIGIN_LAT, BLOCK_ORIGIN_LON
    up, across = dlat(80.0), dlon(80.0, lat0)
    streets = [
        street("Block West", [(lon0, lat0), (lon0, lat0 + up)]),
        street("Block East", [(lon0 + across, lat0), (lon0 + across, lat0 + up)]),
        street("Block South", [(lon0, lat0), (lon0 + across, lat0)]),
        street("Block North", [(lon0, lat0 + up), (lon0 + across, lat0 + up)]),
    ]
    park = {
        "type": "Feature",
        "properties": {"leisure": "park", "name": "Block Park"},
        "geometry": {
            "type": "Polygon",
            "coordinates": [[
                [round(lon0 + across * 0.25, 7), round(lat0 + up * 0.25, 7)],
                [round(lon0 + across * 0.75, 7), round(lat0 + up * 0.25, 7)],
                [round(lon0 + across * 0.75, 7), round(lat0 + up * 0.75, 7)],
                [round(lon0 + across * 0.25, 7), round(lat0 + up * 0.75, 7)],
                [round(lon0 + across * 0.25, 7), round(lat0 + up * 0.25, 7)],
            ]],
        },
    }
    fountain = {
        "type": "Feature",
        "properties": {"amenity": "fountain"},
        "geometry": {
            "type": "Point",
            "coordinates": [round(lon0 + across * 0.5, 7), round(lat0 + up * 0.5, 7)],
        },
    }
    return streets + [park, fountain]


def write(path: Path, doc: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n", "utf-8")
    print(f"wrote {path}")


def main() -> None:
    grid = grid_city()
    block = four_street_block()
    write(FIXTURES / "grid_city.geojson", collection(grid))
    write(FIXTURES / "four_streets.geojson", collection(block))
    write(FIXTURES / "stub_world.geojson", collection(grid + block))
    write(FIXTURES / "empty.geojson", collection([]))


if __name__ == "__main__":
    main()
