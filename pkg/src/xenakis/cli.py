"""Command-line interface: fetch, histogram, sonify, euclid, serve.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3
provider/network error. Data goes to stdout, diagnostics to stderr;
--json-errors switches diagnostics to one machine-readable JSON object.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import (
    BadBoundingBox,
    InvalidArity,
    InvalidBinCount,
    InvalidTempo,
    MalformedDocument,
    NetworkError,
    ProviderError,
    RateLimited,
    XenakisError,
)
from .geo import BoundingBox
from .geojson import ACCEPT_ALL, DEFAULT_STREET_KINDS
from .histogram import histogram_csv, histogram_document, histogram_json_bytes
from .midi import encode_midi
from .pipeline import compass_from_document, sonify_document
from .provider import CacheHandle, DEFAULT_TTL_S, ENV_PROVIDER_URL, default_cache_dir, fetch_region
from .rhythm import bjorklund, onset_text, pattern_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_PROVIDER = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text("utf-8")
    except OSError as exc:
        raise MalformedDocument(f"cannot read {path}: {exc.strerror or exc}") from exc


def _parse_kinds(kinds: str | None):
    if kinds is None:
        return DEFAULT_STREET_KINDS
    if kinds.strip().lower() == "all":
        return ACCEPT_ALL
    return frozenset(k.strip() for k in kinds.split(",") if k.strip())


def _parse_bbox(text: str) -> BoundingBox:
    parts = text.split(",")
    if len(parts) != 4:
        raise click.BadParameter("expected min_lon,min_lat,max_lon,max_lat", param_hint="--bbox")
    try:
        min_lon, min_lat, max_lon, max_lat = (float(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"non-numeric bbox {text!r}", param_hint="--bbox") from None
    try:
        return BoundingBox(min_lon=min_lon, min_lat=min_lat, max_lon=max_lon, max_lat=max_lat)
    except BadBoundingBox as exc:
        raise click.BadParameter(str(exc), param_hint="--bbox") from None


@click.group()
@click.option("--json-errors", is_flag=True, help="Emit errors as JSON on stderr.")
@click.pass_context
def cli(ctx: click.Context, json_errors: bool) -> None:
    """Turn street networks into drum-and-bass loops."""
    ctx.ensure_object(dict)
    ctx.obj["json_errors"] = json_errors


@cli.command()
@click.option("--bbox", required=True, help="min_lon,min_lat,max_lon,max_lat")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Output GeoJSON path.")
@click.option("--provider", envvar=ENV_PROVIDER_URL, required=True, help="Provider endpoint URL.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@click.option("--ttl", type=float, default=DEFAULT_TTL_S, show_default=True, help="Cache TTL seconds.")
def fetch(bbox: str, out: str, provider: str, cache_dir: str | None, ttl: float) -> None:
    """Download street GeoJSON for a bounding box (cached on disk)."""
    box = _parse_bbox(bbox)
    cache = CacheHandle(Path(cache_dir) if cache_dir else default_cache_dir(), ttl_s=ttl)
    text = fetch_region(box, provider, cache)
    Path(out).write_text(text, "utf-8")
    click.echo(f"wrote {out} ({len(text)} bytes)", err=True)


@cli.command()
@click.option("--input", "input_path", required=True, help="GeoJSON file ('-' for stdin).")
@click.option("--bins", type=int, default=16, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--kinds", default=None, help="Comma-separated street kinds, or 'all'.")
def histogram(input_path: str, bins: int, fmt: str, kinds: str | None) -> None:
    """Print the orientation histogram of a GeoJSON file."""
    h, nh, parsed = compass_from_document(_read_input(input_path), bins, _parse_kinds(kinds))
    if parsed.skipped:
        click.echo(f"skipped {parsed.skipped} non-street feature(s)", err=True)
    if fmt == "json":
        sys.stdout.buffer.write(histogram_json_bytes(histogram_document(h, nh)))
    else:
        sys.stdout.write(histogram_csv(h, nh))


@cli.command()
@click.option("--input", "input_path", required=True, help="GeoJSON file ('-' for stdin).")
@click.option("--bins", type=int, default=16, show_default=True)
@click.option("--bpm", type=float, default=120.0, show_default=True)
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Output WAV path.")
@click.option("--midi", "midi_path", type=click.Path(dir_okay=False), default=None, help="Also write a MIDI file.")
@click.option("--pattern", "pattern_out", default=None, help="Write pattern text to a path, '-' for stdout.")
@click.option("--kinds", default=None, help="Comma-separated street kinds, or 'all'.")
@click.option("--half", is_flag=True, help="Play only the first half of the compass.")
def sonify(
    input_path: str,
    bins: int,
    bpm: float,
    out: str,
    midi_path: str | None,
    pattern_out: str | None,
    kinds: str | None,
    half: bool,
) -> None:
    """Render a GeoJSON file into a looping WAV (and optionally MIDI)."""
    outcome = sonify_document(
        _read_input(input_path),
        bins=bins,
        bpm=bpm,
        street_filter=_parse_kinds(kinds),
        half_turn=half,
    )
    Path(out).write_bytes(outcome.wav)
    click.echo(f"wrote {out} ({len(outcome.wav)} bytes, {outcome.loop_seconds:.3f}s loop)", err=True)
    if midi_path:
        Path(midi_path).write_bytes(encode_midi(outcome.pattern, bpm))
        click.echo(f"wrote {midi_path}", err=True)
    if pattern_out == "-":
        click.echo(pattern_text(outcome.pattern))
    elif pattern_out:
        Path(pattern_out).write_text(pattern_text(outcome.pattern) + "\n", "utf-8")


@cli.command()
@click.argument("k", type=int)
@click.argument("n", type=int)
def euclid(k: int, n: int) -> None:
    """Print the Euclidean rhythm E(K, N) in x/. notation."""
    click.echo(onset_text(bjorklund(k, n)))


@cli.command()
@click.option("--port", type=int, default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--provider", envvar=ENV_PROVIDER_URL, default=None, help="Provider endpoint URL.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@click.option("--loop-capacity", type=int, default=None, help="LRU capacity for rendered loops.")
@click.option("--cors-origin", multiple=True, help="Allowed CORS origin (repeatable); default any.")
def serve(
    port: int,
    host: str,
    provider: str | None,
    cache_dir: str | None,
    loop_capacity: int | None,
    cors_origin: tuple[str, ...],
) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    app = create_app(
        provider_url=provider,
        cache_dir=cache_dir,
        loop_capacity=loop_capacity,
        cors_origins=cors_origin or ("*",),
    )
    uvicorn.run(app, host=host, port=port)


def _fail(json_errors: bool, code: int, kind: str, message: str) -> int:
    if json_errors:
        click.echo(json.dumps({"error": kind, "message": message, "exit_code": code}), err=True)
    else:
        click.echo(f"error: {message}", err=True)
    return code


def main(argv: list[str] | None = None) -> int:
    json_errors = "--json-errors" in (argv if argv is not None else sys.argv[1:])
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.exceptions.Abort:
        return _fail(json_errors, EXIT_USAGE, "aborted", "aborted")
    except click.exceptions.UsageError as exc:
        return _fail(json_errors, EXIT_USAGE, "usage", exc.format_message())
    except (InvalidArity, InvalidBinCount, InvalidTempo) as exc:
        # bad values for k/n or --bins/--bpm are usage mistakes, not input files
        return _fail(json_errors, EXIT_USAGE, "usage", str(exc))
    except MalformedDocument as exc:
        return _fail(json_errors, EXIT_INPUT, "malformed_document", str(exc))
    except RateLimited as exc:
        return _fail(json_errors, EXIT_PROVIDER, "rate_limited", str(exc))
    except NetworkError as exc:
        return _fail(json_errors, EXIT_PROVIDER, "network_error", str(exc))
    except ProviderError as exc:
        return _fail(json_errors, EXIT_PROVIDER, "provider_error", str(exc))
    except XenakisError as exc:
        return _fail(json_errors, EXIT_INPUT, "invalid_input", str(exc))
    except OSError as exc:
        return _fail(json_errors, EXIT_INPUT, "io_error", str(exc))


if __name__ == "__main__":
    sys.exit(main())
