#!/usr/bin/env python3
"""Independent street-orientation binning oracle.

Deliberately self-contained: it must not import the xenakis package, and it
uses different numerics than the library (3D unit vectors instead of the
haversine/atan2 bearing formulas) so the two implementations cross-check
each other. Reads a GeoJSON file, bins every (Multi)LineString edge by its
folded bearing, weighted by edge length, and prints the result as JSON.

Usage: python tools/binning_oracle.py fixtures/grid_city.geojson --bins 16
"""

from __future__ import annotations

import argparse
import json
import math
import sys

EARTH_RADIUS_M = 6_371_000.0


def unit_vector(lat_deg: float, lon_deg: float) -> tuple[float, float, float]:
    lat = math.radians(lat_deg)
    lon = math.radians(lon_deg)
    return (math.cos(lat) * math.cos(lon), math.cos(lat) * math.sin(lon), math.sin(lat))


def vector_distance_m(a: tuple, b: tuple) -> float:
    cross = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    sin_angle = math.sqrt(cross[0] ** 2 + cross[1] ** 2 + cross[2] ** 2)
    cos_angle = a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    return EARTH_RADIUS_M * math.atan2(sin_angle, cos_angle)


def vector_bearing_deg(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Bearing via projection of the great-circle tangent onto local north/east."""
    a = unit_vector(lat1, lon1)
    b = unit_vector(lat2, lon2)
    lat = math.radians(lat1)
    lon = math.radians(lon1)
    north = (-math.sin(lat) * math.cos(lon), -math.sin(lat) * math.sin(lon), math.cos(lat))
    east = (-math.sin(lon), math.cos(lon), 0.0)
    along = sum(ai * bi for ai, bi in zip(a, b))
    tangent = tuple(bi - along * ai for ai, bi in zip(a, b))
    to_north = sum(ti * ni for ti, ni in zip(tangent, north))
    to_east = sum(ti * ei for ti, ei in zip(tangent, east))
    return math.degrees(math.atan2(to_east, to_north)) % 360.0


def edges(doc: dict):
    features = doc["features"] if doc.get("type") == "FeatureCollection" else [doc]
    for feature in features:
        geometry = feature.get("geometry") if feature.get("type") == "Feature" else feature
        if not isinstance(geometry, dict):
            continue
        gtype = geometry.get("type")
        if gtype == "LineString":
            lines = [geometry["coordinates"]]
        elif gtype == "MultiLineString":
            lines = geometry["coordinates"]
        else:
            continue
        for line in lines:
            for (lon1, lat1), (lon2, lat2) in zip(line, line[1:]):
                if (lon1, lat1) != (lon2, lat2):
                    yield lat1, lon1, lat2, lon2


def bin_streets(doc: dict, bins: int, min_length_m: float = 0.5) -> list[float]:
    weights = [0.0] * bins
    width = 360.0 / bins
    for lat1, lon1, lat2, lon2 in edges(doc):
        length = vector_distance_m(unit_vector(lat1, lon1), unit_vector(lat2, lon2))
        if length < min_length_m:
            continue
        bearing = vector_bearing_deg(lat1, lon1, lat2, lon2)
        folded = bearing % 180.0
        if folded == 180.0:
            folded = 0.0
        index = int(((folded + width / 2.0) % 180.0) / width)
        weights[index] += length
        weights[index + bins // 2] += length
    return weights


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("geojson", help="GeoJSON file to bin")
    parser.add_argument("--bins", type=int, default=16)
    args = parser.parse_args()
    with open(args.geojson, encoding="utf-8") as fh:
        doc = json.load(fh)
    weights = bin_streets(doc, args.bins)
    json.dump({"bins": weights}, sys.stdout)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
