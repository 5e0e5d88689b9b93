"""A tiny fixture-backed map-data provider for hermetic tests and demos.

Serves features from one GeoJSON file, answering bbox queries the same way
the real endpoint would:

    python -m xenakis.stub_provider --data fixtures/stub_world.geojson --port 8699

GET <anything>?min_lon=&min_lat=&max_lon=&max_lat= returns a
FeatureCollection of the features whose coordinate bounding box intersects
the query box.
"""

from __future__ import annotations

import argparse
import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse


def _positions(geometry: dict):
    gtype = geometry.get("type")
    coords = geometry.get("coordinates", [])
    if gtype == "Point":
        yield coords
    elif gtype in ("LineString", "MultiPoint"):
        yield from coords
    elif gtype in ("MultiLineString", "Polygon"):
        for part in coords:
            yield from part
    elif gtype == "MultiPolygon":
        for poly in coords:
            for ring in poly:
                yield from ring


def _feature_bbox(feature: dict) -> tuple[float, float, float, float] | None:
    pts = list(_positions(feature.get("geometry") or {}))
    if not pts:
        return None
    lons = [p[0] for p in pts]
    lats = [p[1] for p in pts]
    return min(lons), min(lats), max(lons), max(lats)


def select_features(world: dict, min_lon: float, min_lat: float, max_lon: float, max_lat: float) -> dict:
    chosen = []
    for feature in world.get("features", []):
        fb = _feature_bbox(feature)
        if fb is None:
            continue
        f_min_lon, f_min_lat, f_max_lon, f_max_lat = fb
        if f_min_lon <= max_lon and f_max_lon >= min_lon and f_min_lat <= max_lat and f_max_lat >= min_lat:
            chosen.append(feature)
    return {"type": "FeatureCollection", "features": chosen}


class StubHandler(BaseHTTPRequestHandler):
    world: dict = {"type": "FeatureCollection", "features": []}

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        params = parse_qs(urlparse(self.path).query)
        try:
            box = [float(params[k][0]) for k in ("min_lon", "min_lat", "max_lon", "max_lat")]
        except (KeyError, ValueError):
            self._send(400, b'{"error": "need min_lon, min_lat, max_lon, max_lat"}')
            return
        body = json.dumps(select_features(self.world, *box)).encode("utf-8")
        self._send(200, body)

    def _send(self, status: int, body: bytes) -> None:
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, fmt: str, *args) -> None:
        pass  # keep test output quiet


def serve_fixture(data_path: str, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Start the stub in a daemon thread; returns the bound server."""
    with open(data_path, encoding="utf-8") as fh:
        world = json.load(fh)
    handler = type("BoundStubHandler", (StubHandler,), {"world": world})
    server = ThreadingHTTPServer((host, port), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", required=True, help="GeoJSON FeatureCollection to serve")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8699)
    args = parser.parse_args()
    server = serve_fixture(args.data, args.host, args.port)
    print(f"stub provider serving {args.data} on http://{args.host}:{server.server_address[1]}")
    try:
        threading.Event().wait()
    except KeyboardInterrupt:
        server.shutdown()


if __name__ == "__main__":
    main()
