"""Access to the packaged golden fan corpus."""
from __future__ import annotations

from pathlib import Path

from .fans import Fan
from .io import document_to_fan, parse_fan_document

GOLDEN_DIR = Path(__file__).parent / "golden"


def golden_paths() -> dict[str, Path]:
    return {p.stem: p for p in sorted(GOLDEN_DIR.glob("*.json")) if ".expected." not in p.name}


def golden_fans() -> dict[str, Fan]:
    return {name: document_to_fan(parse_fan_document(p.read_text(encoding="utf-8")))
            for name, p in golden_paths().items()}
