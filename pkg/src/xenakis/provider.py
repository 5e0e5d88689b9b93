"""Region fetching from an Overpass-style GeoJSON endpoint, with a disk cache.

The endpoint is any HTTP URL that answers a bbox query with GeoJSON. URLs
may embed {min_lon}/{min_lat}/{max_lon}/{max_lat} placeholders; without
placeholders the bbox is appended as query parameters. Responses are
cached on disk, one entry per (rounded bbox, endpoint, query template)
key: a .geojson file with the raw bytes and a .meta sidecar in a
line-oriented key=value format:

    fetched_unix=<float unix timestamp>
    endpoint=<endpoint url>
    bbox=<min_lon>,<min_lat>,<max_lon>,<max_lat>
    sha256=<hex digest of the .geojson bytes>

Entries older than the TTL are refetched. Concurrency: one writer per
cache key, at most 2 in-flight requests per endpoint.
"""

from __future__ import annotations

import hashlib
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path

import requests
from platformdirs import user_cache_dir

from .errors import CacheCorrupt, NetworkError, ProviderError, RateLimited
from .geo import BoundingBox

DEFAULT_TTL_S = 7 * 24 * 3600.0
DEFAULT_TIMEOUT_S = 30.0
QUERY_TEMPLATE = "min_lon={min_lon}&min_lat={min_lat}&max_lon={max_lon}&max_lat={max_lat}"
PLACEHOLDERS = ("{min_lon}", "{min_lat}", "{max_lon}", "{max_lat}")

ENV_PROVIDER_URL = "XENAKIS_PROVIDER_URL"
ENV_CACHE_DIR = "XENAKIS_CACHE_DIR"

_registry_lock = threading.Lock()
_key_locks: dict[str, threading.Lock] = {}
_endpoint_slots: dict[str, threading.Semaphore] = {}


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    return Path(env) if env else Path(user_cache_dir("xenakis"))


def _key_lock(key: str) -> threading.Lock:
    with _registry_lock:
        return _key_locks.setdefault(key, threading.Lock())


def _endpoint_slot(endpoint: str) -> threading.Semaphore:
    with _registry_lock:
        return _endpoint_slots.setdefault(endpoint, threading.Semaphore(2))


def _rounded_bbox(bbox: BoundingBox) -> str:
    # 5 decimals (~1 m) so float formatting does not split cache keys
    return f"{bbox.min_lon:.5f},{bbox.min_lat:.5f},{bbox.max_lon:.5f},{bbox.max_lat:.5f}"


def cache_key(bbox: BoundingBox, endpoint: str) -> str:
    material = f"{endpoint}\n{QUERY_TEMPLATE}\n{_rounded_bbox(bbox)}"
    return hashlib.sha256(material.encode("utf-8")).hexdigest()[:32]


def request_url(bbox: BoundingBox, endpoint: str) -> str:
    values = {
        "min_lon": repr(bbox.min_lon),
        "min_lat": repr(bbox.min_lat),
        "max_lon": repr(bbox.max_lon),
        "max_lat": repr(bbox.max_lat),
    }
    if any(p in endpoint for p in PLACEHOLDERS):
        url = endpoint
        for name, value in values.items():
            url = url.replace("{" + name + "}", value)
        return url
    query = QUERY_TEMPLATE.format(**values)
    return endpoint + ("&" if "?" in endpoint else "?") + query


@dataclass
class CacheHandle:
    """Disk cache in `directory`; entries expire after ttl_s seconds."""

    directory: Path
    ttl_s: float = DEFAULT_TTL_S

    def __post_init__(self) -> None:
        self.directory = Path(self.directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _paths(self, key: str) -> tuple[Path, Path]:
        return self.directory / f"{key}.geojson", self.directory / f"{key}.meta"

    def read(self, key: str) -> str | None:
        """Cached document for key, or None on miss/expiry.

        Raises CacheCorrupt when the entry exists but cannot be trusted.
        """
        data_path, meta_path = self._paths(key)
        if not data_path.exists() and not meta_path.exists():
            return None
        try:
            meta = self._read_meta(meta_path)
            data = data_path.read_bytes()
        except (OSError, ValueError) as exc:
            raise CacheCorrupt(f"cache entry {key} unreadable: {exc}") from exc
        if hashlib.sha256(data).hexdigest() != meta.get("sha256"):
            raise CacheCorrupt(f"cache entry {key} failed checksum")
        try:
            fetched = float(meta["fetched_unix"])
        except (KeyError, ValueError) as exc:
            raise CacheCorrupt(f"cache entry {key} has no usable timestamp") from exc
        if time.time() - fetched > self.ttl_s:
            return None
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CacheCorrupt(f"cache entry {key} is not UTF-8") from exc

    @staticmethod
    def _read_meta(meta_path: Path) -> dict[str, str]:
        meta: dict[str, str] = {}
        for line in meta_path.read_text("utf-8").splitlines():
            if not line.strip():
                continue
            name, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"bad meta line {line!r}")
            meta[name] = value
        return meta

    def write(self, key: str, text: str, endpoint: str, bbox: BoundingBox) -> None:
        data_path, meta_path = self._paths(key)
        data = text.encode("utf-8")
        meta = (
            f"fetched_unix={time.time()!r}\n"
            f"endpoint={endpoint}\n"
            f"bbox={_rounded_bbox(bbox)}\n"
            f"sha256={hashlib.sha256(data).hexdigest()}\n"
        )
        # write-then-rename so readers never see partial entries
        for path, payload in ((data_path, data), (meta_path, meta.encode("utf-8"))):
            tmp = path.with_suffix(path.suffix + ".tmp")
            tmp.write_bytes(payload)
            os.replace(tmp, path)

    def drop(self, key: str) -> None:
        for path in self._paths(key):
            try:
                path.unlink()
            except FileNotFoundError:
                pass

    def entry_count(self) -> int:
        return sum(1 for _ in self.directory.glob("*.geojson"))


def _http_get(url: str, endpoint: str, timeout_s: float) -> str:
    slot = _endpoint_slot(endpoint)
    with slot:
        try:
            response = requests.get(url, timeout=timeout_s)
        except requests.exceptions.RequestException as exc:
            raise NetworkError(f"provider unreachable: {exc}") from exc
    if response.status_code == 429:
        retry_after: float | None
        try:
            retry_after = float(response.headers.get("Retry-After", ""))
        except ValueError:
            retry_after = None
        raise RateLimited(retry_after)
    if response.status_code != 200:
        raise ProviderError(response.status_code, response.text)
    return response.text


def fetch_region(
    bbox: BoundingBox,
    endpoint: str,
    cache: CacheHandle,
    timeout_s: float = DEFAULT_TIMEOUT_S,
) -> str:
    """GeoJSON text for all street-like ways intersecting bbox.

    Served from the disk cache when a fresh entry exists; otherwise one
    network request is made and stored. A corrupt entry is dropped and
    refetched once.
    """
    key = cache_key(bbox, endpoint)
    try:
        cached = cache.read(key)
    except CacheCorrupt:
        cache.drop(key)
        cached = None
    if cached is not None:
        return cached

    with _key_lock(key):
        try:
            cached = cache.read(key)  # another writer may have landed it
        except CacheCorrupt:
            cache.drop(key)
            cached = None
        if cached is not None:
            return cached
        text = _http_get(request_url(bbox, endpoint), endpoint, timeout_s)
        cache.write(key, text, endpoint, bbox)
        return text
