"""HTTP API: region in, music out.

Endpoints:
    GET  /v1/histogram?min_lon=&min_lat=&max_lon=&max_lat=&bins=
    POST /v1/sonify            body: {"bbox": {...}} or {"geojson": ...} plus options
    GET  /v1/loop/{id}.wav
    GET  /healthz

Rendered loops live in a bounded in-memory LRU store keyed by a content
hash of (document bytes, parameters), so identical requests against
identical provider bytes reuse the stored loop without re-rendering.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path

import requests
from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .errors import (
    BadBoundingBox,
    InvalidTempo,
    MalformedDocument,
    NetworkError,
    ProviderError,
    RateLimited,
)
from .geo import BoundingBox
from .histogram import histogram_document, histogram_json_bytes
from .pipeline import compass_from_document, sonify_document
from .provider import CacheHandle, ENV_PROVIDER_URL, default_cache_dir, fetch_region
from .rhythm import MappingConfig, pattern_document

ENV_LOOP_CAPACITY = "XENAKIS_LOOP_CAPACITY"
DEFAULT_LOOP_CAPACITY = 128
INLINE_LIMIT_BYTES = 20 * 1024 * 1024


@dataclass
class LoopStore:
    """Bounded LRU of rendered loops, safe for concurrent handlers."""

    capacity: int = DEFAULT_LOOP_CAPACITY
    _entries: OrderedDict[str, dict] = field(default_factory=OrderedDict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def get(self, loop_id: str) -> dict | None:
        with self._lock:
            entry = self._entries.get(loop_id)
            if entry is not None:
                self._entries.move_to_end(loop_id)
            return entry

    def put(self, loop_id: str, entry: dict) -> None:
        with self._lock:
            self._entries[loop_id] = entry
            self._entries.move_to_end(loop_id)
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


def _error(status: int, code: str, message: str, headers: dict | None = None) -> JSONResponse:
    return JSONResponse({"error": code, "message": message}, status_code=status, headers=headers)


def _parse_bbox_params(params) -> BoundingBox:
    values = {}
    for name in ("min_lon", "min_lat", "max_lon", "max_lat"):
        raw = params.get(name)
        if raw is None:
            raise BadBoundingBox(f"missing parameter {name}")
        try:
            values[name] = float(raw)
        except (TypeError, ValueError):
            raise BadBoundingBox(f"parameter {name}={raw!r} is not a number") from None
    return BoundingBox(**values)


def _mapping_from(overrides: dict | None) -> MappingConfig:
    if not overrides:
        return MappingConfig()
    kwargs = {}
    if "thresholds" in overrides:
        kwargs["thresholds"] = tuple(float(t) for t in overrides["thresholds"])
    if "bass_hz" in overrides:
        kwargs["bass_hz"] = tuple(float(f) for f in overrides["bass_hz"])
    return MappingConfig(**kwargs)


def create_app(
    provider_url: str | None = None,
    cache_dir: str | Path | None = None,
    loop_capacity: int | None = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    provider_url = provider_url or os.environ.get(ENV_PROVIDER_URL)
    if loop_capacity is None:
        loop_capacity = int(os.environ.get(ENV_LOOP_CAPACITY, DEFAULT_LOOP_CAPACITY))

    app = FastAPI(title="xenakis", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    app.state.provider_url = provider_url
    app.state.cache = CacheHandle(Path(cache_dir) if cache_dir else default_cache_dir())
    app.state.loops = LoopStore(capacity=loop_capacity)
    app.state.render_count = 0

    def fetch(bbox: BoundingBox) -> str:
        if not app.state.provider_url:
            raise ProviderError(503, "no provider endpoint configured")
        return fetch_region(bbox, app.state.provider_url, app.state.cache)

    @app.get("/v1/histogram")
    def histogram_endpoint(request: Request) -> Response:
        try:
            bbox = _parse_bbox_params(request.query_params)
        except BadBoundingBox as exc:
            return _error(400, "bad_bbox", str(exc))
        try:
            bins = int(request.query_params.get("bins", "16"))
        except ValueError:
            return _error(400, "bad_bins", "bins must be an integer")
        if bins < 4 or bins % 2 != 0:
            return _error(400, "bad_bins", f"bins must be even and >= 4, got {bins}")
        try:
            text = fetch(bbox)
            h, nh, _ = compass_from_document(text, bins)
        except RateLimited as exc:
            headers = {"Retry-After": str(exc.retry_after)} if exc.retry_after else None
            return _error(429, "rate_limited", str(exc), headers)
        except NetworkError as exc:
            return _error(502, "network_error", str(exc))
        except ProviderError as exc:
            return _error(502, "provider_error", str(exc))
        except MalformedDocument as exc:
            return _error(502, "provider_error", f"provider returned unusable GeoJSON: {exc}")
        body = histogram_json_bytes(histogram_document(h, nh))
        return Response(content=body, media_type="application/json")

    @app.post("/v1/sonify")
    async def sonify_endpoint(request: Request) -> Response:
        try:
            payload = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            return _error(400, "bad_json", f"request body is not JSON: {exc.msg}")
        if not isinstance(payload, dict):
            return _error(400, "bad_json", "request body must be a JSON object")

        has_bbox = "bbox" in payload
        has_doc = "geojson" in payload
        if has_bbox == has_doc:
            return _error(400, "bad_query", "provide exactly one of 'bbox' or 'geojson'")

        try:
            bins = int(payload.get("bins", 16))
            bpm = float(payload.get("bpm", 120.0))
            mapping = _mapping_from(payload.get("mapping"))
        except (TypeError, ValueError) as exc:
            return _error(400, "bad_params", str(exc))
        if bins < 4 or bins % 2 != 0:
            return _error(400, "bad_params", f"bins must be even and >= 4, got {bins}")

        if has_doc:
            doc = payload["geojson"]
            text = doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True, separators=(",", ":"))
            if len(text.encode("utf-8")) > INLINE_LIMIT_BYTES:
                return _error(413, "too_large", "inline GeoJSON exceeds the 20 MB limit")
        else:
            if not isinstance(payload["bbox"], dict):
                return _error(400, "bad_bbox", "bbox must be an object")
            try:
                bbox = _parse_bbox_params(payload["bbox"])
            except BadBoundingBox as exc:
                return _error(400, "bad_bbox", str(exc))
            try:
                text = fetch(bbox)
            except RateLimited as exc:
                headers = {"Retry-After": str(exc.retry_after)} if exc.retry_after else None
                return _error(429, "rate_limited", str(exc), headers)
            except NetworkError as exc:
                return _error(502, "network_error", str(exc))
            except ProviderError as exc:
                return _error(502, "provider_error", str(exc))

        material = json.dumps(
            {
                "doc_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
                "bins": bins,
                "bpm": bpm,
                "thresholds": mapping.thresholds,
                "bass_hz": mapping.bass_hz,
            },
            sort_keys=True,
        )
        loop_id = hashlib.sha256(material.encode("utf-8")).hexdigest()[:32]

        entry = app.state.loops.get(loop_id)
        if entry is None:
            try:
                outcome = sonify_document(text, bins=bins, bpm=bpm, mapping=mapping)
            except MalformedDocument as exc:
                code = "bad_geojson" if has_doc else "provider_error"
                return _error(400 if has_doc else 502, code, str(exc))
            except (InvalidTempo, ValueError) as exc:
                return _error(400, "bad_params", str(exc))
            app.state.render_count += 1
            entry = {
                "wav": outcome.wav,
                "result": {
                    "histogram": histogram_document(outcome.histogram, outcome.normalized),
                    "pattern": pattern_document(outcome.pattern),
                    "loop_id": loop_id,
                    "loop_url": f"/v1/loop/{loop_id}.wav",
                    "timing": {
                        "step_seconds": outcome.step_seconds,
                        "loop_seconds": outcome.loop_seconds,
                    },
                },
            }
            app.state.loops.put(loop_id, entry)
        return JSONResponse(entry["result"])

    @app.get("/v1/loop/{loop_id}.wav")
    def loop_endpoint(loop_id: str) -> Response:
        entry = app.state.loops.get(loop_id)
        if entry is None:
            return _error(404, "unknown_loop", f"no loop {loop_id!r} (unknown or evicted)")
        return Response(content=entry["wav"], media_type="audio/wav")

    @app.get("/healthz")
    def healthz() -> JSONResponse:
        reachable = None
        if app.state.provider_url:
            try:
                requests.get(app.state.provider_url, timeout=2.0)
                reachable = True
            except requests.exceptions.RequestException:
                reachable = False
        return JSONResponse(
            {
                "status": "ok",
                "version": __version__,
                "provider_reachable": reachable,
                "cache_stats": {
                    "loop_store_size": len(app.state.loops),
                    "loop_store_capacity": app.state.loops.capacity,
                    "ingest_cache_entries": app.state.cache.entry_count(),
                    "renders": app.state.render_count,
                },
            }
        )

    return app
