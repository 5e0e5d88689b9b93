"""Spherical geometry: points, bounding boxes, distance, bearing.

All public angles are degrees; latitude positive north, longitude positive
east. Distances use a spherical Earth with mean radius 6,371,000 m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadBoundingBox, DegenerateSegment

EARTH_RADIUS_M = 6_371_000.0


def normalize_lon(lon: float) -> float:
    """Fold a longitude into [-180, 180] by adding/subtracting 360."""
    while lon > 180.0:
        lon -= 360.0
    while lon < -180.0:
        lon += 360.0
    return lon


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude {self.lat} outside [-90, 90]")
        object.__setattr__(self, "lon", normalize_lon(self.lon))


@dataclass(frozen=True)
class BoundingBox:
    min_lon: float
    min_lat: float
    max_lon: float
    max_lat: float

    def __post_init__(self) -> None:
        for name in ("min_lat", "max_lat"):
            v = getattr(self, name)
            if not -90.0 <= v <= 90.0:
                raise BadBoundingBox(f"{name}={v} outside [-90, 90]")
        for name in ("min_lon", "max_lon"):
            v = getattr(self, name)
            if not -180.0 <= v <= 180.0:
                raise BadBoundingBox(f"{name}={v} outside [-180, 180]")
        if not self.min_lat < self.max_lat:
            raise BadBoundingBox(f"min_lat {self.min_lat} must be < max_lat {self.max_lat}")
        if not self.min_lon < self.max_lon:
            # antimeridian-crossing boxes are rejected rather than guessed at
            raise BadBoundingBox(f"min_lon {self.min_lon} must be < max_lon {self.max_lon}")

    def contains(self, p: GeoPoint) -> bool:
        return self.min_lat <= p.lat <= self.max_lat and self.min_lon <= p.lon <= self.max_lon


@dataclass(frozen=True)
class StreetSegment:
    """One straight piece of street: endpoints, length, folded bearing."""

    a: GeoPoint
    b: GeoPoint
    length_m: float
    bearing_deg: float  # in [0, 180)


def haversine_m(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance between two points in meters."""
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dphi = math.radians(b.lat - a.lat)
    dlam = math.radians(b.lon - a.lon)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(h)))


def forward_azimuth(a: GeoPoint, b: GeoPoint) -> float:
    """Initial great-circle bearing from a to b, degrees clockwise from north.

    Raises DegenerateSegment when the points coincide.
    """
    if a.lat == b.lat and a.lon == b.lon:
        raise DegenerateSegment(f"identical endpoints {a}")
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dlam = math.radians(b.lon - a.lon)
    y = math.sin(dlam) * math.cos(phi2)
    x = math.cos(phi1) * math.sin(phi2) - math.sin(phi1) * math.cos(phi2) * math.cos(dlam)
    az = math.degrees(math.atan2(y, x)) % 360.0
    # a tiny negative angle mod 360 can round up to exactly 360.0
    return 0.0 if az == 360.0 else az


def fold_bearing(az: float) -> float:
    """Collapse a bearing onto [0, 180): opposite directions coincide."""
    folded = math.fmod(az, 180.0)
    if folded < 0.0:
        folded += 180.0
    return 0.0 if folded == 180.0 else folded


def segment_between(a: GeoPoint, b: GeoPoint) -> StreetSegment:
    """Build a StreetSegment between two distinct points.

    Length and bearing are computed from a canonical endpoint ordering so
    that segment_between(a, b) and segment_between(b, a) are numerically
    identical; without this, meridian convergence makes the folded bearings
    of the two directions differ by a hair and reversal invariance would
    only hold approximately.
    """
    lo, hi = ((a, b) if (a.lat, a.lon) <= (b.lat, b.lon) else (b, a))
    return StreetSegment(
        a=a,
        b=b,
        length_m=haversine_m(lo, hi),
        bearing_deg=fold_bearing(forward_azimuth(lo, hi)),
    )
