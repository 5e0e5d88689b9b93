"""Exception types shared across the package."""

from __future__ import annotations


class XenakisError(Exception):
    """Base class for all errors raised by this package."""


class MalformedDocument(XenakisError):
    """Input text is not a usable GeoJSON document.

    Carries a human-readable reason plus line/offset context when the
    failure came from the JSON decoder.
    """

    def __init__(self, reason: str, line: int | None = None, offset: int | None = None):
        self.reason = reason
        self.line = line
        self.offset = offset
        where = f" (line {line}, offset {offset})" if line is not None else ""
        super().__init__(f"{reason}{where}")


class DegenerateSegment(XenakisError):
    """Both endpoints of a segment coincide; bearing is undefined."""


class InvalidBinCount(XenakisError):
    """Histogram bin count must be an even integer >= 4."""


class OutOfRange(XenakisError):
    """A normalized weight fell outside [0, 1]."""


class InvalidArity(XenakisError):
    """Euclidean rhythm request with k > n or n = 0."""


class TooFewOnsets(XenakisError):
    """Evenness needs at least two onsets."""


class InvalidTempo(XenakisError):
    """Tempo outside the supported [40, 300] bpm range."""


class MissingFrequency(XenakisError):
    """Pitched voice rendered without a frequency."""


class BadBoundingBox(XenakisError):
    """Bounding box fails its invariants (empty, inverted, or out of range)."""


class NetworkError(XenakisError):
    """Provider endpoint unreachable or timed out."""


class ProviderError(XenakisError):
    """Provider answered with a non-success status."""

    def __init__(self, status: int, body: str):
        self.status = status
        self.body = body
        super().__init__(f"provider returned HTTP {status}: {body[:200]}")


class RateLimited(XenakisError):
    """Provider answered 429; retry_after is seconds when the header was usable."""

    def __init__(self, retry_after: float | None = None):
        self.retry_after = retry_after
        suffix = f", retry after {retry_after}s" if retry_after is not None else ""
        super().__init__(f"provider rate limit hit{suffix}")


class CacheCorrupt(XenakisError):
    """A disk cache entry could not be read back; it has been dropped."""
