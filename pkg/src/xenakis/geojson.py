"""GeoJSON ingestion: FeatureCollections to street features and segments.

Only (Multi)LineString geometries become streets; everything else is
skipped and counted so callers can report what was ignored. Coordinates
follow RFC 7946 [lon, lat] order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import MalformedDocument
from .geo import GeoPoint, StreetSegment, segment_between

# Special filter value: accept every street kind.
ACCEPT_ALL = "accept-all"

# Default street classes considered sonifiable; overridable everywhere a
# filter is accepted.
DEFAULT_STREET_KINDS = frozenset(
    kind + suffix
    for kind in (
        "motorway",
        "trunk",
        "primary",
        "secondary",
        "tertiary",
        "residential",
        "unclassified",
        "living_street",
    )
    for suffix in ("", "_link")
)

# Segments shorter than this are treated as coordinate noise and dropped.
MIN_SEGMENT_M = 0.5


@dataclass(frozen=True)
class StreetFeature:
    id: str
    kind: str
    path: tuple[GeoPoint, ...]  # >= 2 points, no consecutive duplicates


@dataclass
class ParseResult:
    """Parsed streets plus a summary of what was ignored along the way."""

    features: list[StreetFeature] = field(default_factory=list)
    skipped: int = 0
    skipped_types: dict[str, int] = field(default_factory=dict)
    duplicate_points_removed: int = 0
    degenerate_features: int = 0


def _as_point(position: object, where: str) -> GeoPoint:
    if not isinstance(position, (list, tuple)) or len(position) < 2:
        raise MalformedDocument(f"{where}: position must be [lon, lat, ...]")
    lon, lat = position[0], position[1]
    if isinstance(lon, bool) or isinstance(lat, bool):
        raise MalformedDocument(f"{where}: position coordinates must be numbers")
    if not isinstance(lon, (int, float)) or not isinstance(lat, (int, float)):
        raise MalformedDocument(f"{where}: position coordinates must be numbers")
    if not -90.0 <= lat <= 90.0:
        raise MalformedDocument(f"{where}: latitude {lat} outside [-90, 90]")
    return GeoPoint(lat=float(lat), lon=float(lon))


def _dedupe(points: list[GeoPoint]) -> tuple[list[GeoPoint], int]:
    out: list[GeoPoint] = []
    removed = 0
    for p in points:
        if out and out[-1] == p:
            removed += 1
            continue
        out.append(p)
    return out, removed


def _line_paths(geometry: dict, where: str) -> list[list[GeoPoint]]:
    """Coordinate paths of a (Multi)LineString geometry, one per member line."""
    gtype = geometry.get("type")
    coords = geometry.get("coordinates")
    if gtype == "LineString":
        if not isinstance(coords, list):
            raise MalformedDocument(f"{where}: LineString coordinates must be a list")
        return [[_as_point(pos, where) for pos in coords]]
    if gtype == "MultiLineString":
        if not isinstance(coords, list):
            raise MalformedDocument(f"{where}: MultiLineString coordinates must be a list")
        paths = []
        for i, line in enumerate(coords):
            if not isinstance(line, list):
                raise MalformedDocument(f"{where}: member line {i} must be a list")
            paths.append([_as_point(pos, f"{where} line {i}") for pos in line])
        return paths
    raise MalformedDocument(f"{where}: unexpected geometry type {gtype!r}")


def _iter_features(doc: dict) -> list[dict]:
    """Normalize FeatureCollection / Feature / bare geometry into features."""
    dtype = doc.get("type")
    if dtype == "FeatureCollection":
        features = doc.get("features")
        if not isinstance(features, list):
            raise MalformedDocument("FeatureCollection features must be a list")
        for i, f in enumerate(features):
            if not isinstance(f, dict) or f.get("type") != "Feature":
                raise MalformedDocument(f"features[{i}] is not a Feature object")
        return features
    if dtype == "Feature":
        return [doc]
    if dtype in ("LineString", "MultiLineString", "Point", "MultiPoint", "Polygon",
                 "MultiPolygon", "GeometryCollection"):
        return [{"type": "Feature", "properties": {}, "geometry": doc}]
    raise MalformedDocument(f"not a GeoJSON document (type={dtype!r})")


def parse_feature_collection(text: str) -> ParseResult:
    """Parse GeoJSON text into street features.

    Every (Multi)LineString feature becomes one StreetFeature per member
    line; other geometries are counted as skipped. Consecutive duplicate
    coordinates are removed; lines degenerating to fewer than 2 points are
    dropped and counted. An empty collection is a valid, empty result.

    Raises MalformedDocument for anything that is not usable GeoJSON,
    carrying line/offset context when the JSON itself failed to decode.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc.msg}", line=exc.lineno, offset=exc.colno) from exc
    if not isinstance(doc, dict):
        raise MalformedDocument(f"GeoJSON root must be an object, got {type(doc).__name__}")

    result = ParseResult()
    for index, feature in enumerate(_iter_features(doc)):
        where = f"feature {index}"
        geometry = feature.get("geometry")
        if geometry is None:
            # null geometry is legal GeoJSON, just not a street
            result.skipped += 1
            result.skipped_types["null"] = result.skipped_types.get("null", 0) + 1
            continue
        if not isinstance(geometry, dict):
            raise MalformedDocument(f"{where}: geometry must be an object")
        gtype = geometry.get("type")
        if gtype not in ("LineString", "MultiLineString"):
            result.skipped += 1
            key = gtype if isinstance(gtype, str) else "missing"
            result.skipped_types[key] = result.skipped_types.get(key, 0) + 1
            continue

        properties = feature.get("properties")
        if properties is None:
            properties = {}
        if not isinstance(properties, dict):
            raise MalformedDocument(f"{where}: properties must be an object or null")
        kind = properties.get("highway")
        if not isinstance(kind, str) or not kind:
            kind = "unknown"

        fid = feature.get("id")
        if fid is None:
            fid = properties.get("id")
        fid = str(fid) if fid is not None else f"feature-{index}"

        paths = _line_paths(geometry, where)
        multi = len(paths) > 1
        for part, points in enumerate(paths):
            points, removed = _dedupe(points)
            result.duplicate_points_removed += removed
            if len(points) < 2:
                result.degenerate_features += 1
                continue
            part_id = f"{fid}#{part}" if multi else fid
            result.features.append(StreetFeature(id=part_id, kind=kind, path=tuple(points)))
    return result


def explode_segments(
    features: list[StreetFeature],
    street_filter: frozenset[str] | set[str] | str = DEFAULT_STREET_KINDS,
) -> list[StreetSegment]:
    """Split accepted features into per-edge segments.

    street_filter is a set of accepted kind strings or ACCEPT_ALL. Each
    consecutive point pair becomes one segment; segments shorter than
    MIN_SEGMENT_M are dropped as noise.
    """
    accept_all = street_filter == ACCEPT_ALL
    segments: list[StreetSegment] = []
    for feature in features:
        if not accept_all and feature.kind not in street_filter:
            continue
        for a, b in zip(feature.path, feature.path[1:]):
            seg = segment_between(a, b)
            if seg.length_m < MIN_SEGMENT_M:
                continue
            segments.append(seg)
    return segments
