#!/usr/bin/env python3
"""Re-pin the golden WAV hash for the grid-city loop.

Run after any deliberate change to the synthesis defaults, then review the
diff: the hash freezing makes unintended changes to rendering loud.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from xenakis.pipeline import sonify_document

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN = REPO_ROOT / "tests" / "golden" / "grid_loop_wav.sha256"


def main() -> None:
    text = (REPO_ROOT / "fixtures" / "grid_city.geojson").read_text("utf-8")
    digest = hashlib.sha256(sonify_document(text).wav).hexdigest()
    GOLDEN.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN.write_text(digest + "\n")
    print(f"pinned {digest} -> {GOLDEN}")


if __name__ == "__main__":
    main()
