"""Street networks as drum-and-bass loops.

A region's streets are folded into a symmetric circular histogram of
orientations (the musical compass), the compass becomes a step-sequencer
pattern, and the pattern is rendered into a seamless audio loop. Exposed
as a library, a CLI (`xenakis`), and an HTTP service.
"""

__version__ = "0.1.0"

from .errors import (
    BadBoundingBox,
    CacheCorrupt,
    DegenerateSegment,
    InvalidArity,
    InvalidBinCount,
    InvalidTempo,
    MalformedDocument,
    MissingFrequency,
    NetworkError,
    OutOfRange,
    ProviderError,
    RateLimited,
    TooFewOnsets,
    XenakisError,
)
from .geo import BoundingBox, GeoPoint, StreetSegment, fold_bearing, forward_azimuth, haversine_m
from .geojson import (
    ACCEPT_ALL,
    DEFAULT_STREET_KINDS,
    ParseResult,
    StreetFeature,
    explode_segments,
    parse_feature_collection,
)
from .histogram import NormalizedHistogram, OrientationHistogram, build_histogram, normalize
from .midi import encode_midi
from .pipeline import SonifyOutcome, compass_from_document, sonify_document
from .provider import CacheHandle, fetch_region
from .rhythm import (
    MappingConfig,
    OnsetPattern,
    RhythmPattern,
    Step,
    bjorklund,
    evenness,
    histogram_to_pattern,
    pattern_period,
    pattern_text,
    quantize,
)
from .synth import AudioLoop, VoiceParams, render_loop, render_voice
from .wavio import encode_wav

__all__ = [
    "__version__",
    "ACCEPT_ALL",
    "AudioLoop",
    "BadBoundingBox",
    "BoundingBox",
    "CacheCorrupt",
    "CacheHandle",
    "DEFAULT_STREET_KINDS",
    "DegenerateSegment",
    "GeoPoint",
    "InvalidArity",
    "InvalidBinCount",
    "InvalidTempo",
    "MalformedDocument",
    "MappingConfig",
    "MissingFrequency",
    "NetworkError",
    "NormalizedHistogram",
    "OnsetPattern",
    "OrientationHistogram",
    "OutOfRange",
    "ParseResult",
    "ProviderError",
    "RateLimited",
    "RhythmPattern",
    "SonifyOutcome",
    "Step",
    "StreetFeature",
    "StreetSegment",
    "TooFewOnsets",
    "VoiceParams",
    "XenakisError",
    "bjorklund",
    "build_histogram",
    "compass_from_document",
    "encode_midi",
    "encode_wav",
    "evenness",
    "explode_segments",
    "fetch_region",
    "fold_bearing",
    "forward_azimuth",
    "haversine_m",
    "histogram_to_pattern",
    "normalize",
    "parse_feature_collection",
    "pattern_period",
    "pattern_text",
    "quantize",
    "render_loop",
    "render_voice",
    "sonify_document",
]
