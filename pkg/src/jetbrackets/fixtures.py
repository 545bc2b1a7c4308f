"""Loading of the package's text fixtures.

One format everywhere: UTF-8 text, ``#`` comments, section headers in
square brackets, and entries of the shape::

    name | locator | payload

The payload is whatever the consuming module expects, usually the
polynomial surface syntax of :mod:`jetbrackets.rings`.  The locator is a
free-form anchor string carried into reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

__all__ = ["FixtureEntry", "FixtureError", "FIXTURE_DIR", "fixture_path", "load_fixture"]

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"


class FixtureError(ValueError):
    """Malformed fixture file or missing fixture."""


@dataclass(frozen=True)
class FixtureEntry:
    section: str
    name: str
    locator: str
    payload: str


def fixture_path(basename: str, override_dir: str | Path | None = None) -> Path:
    root = Path(override_dir) if override_dir is not None else FIXTURE_DIR
    path = root / basename
    if not path.is_file():
        raise FixtureError(f"fixture file not found: {path}")
    return path


def load_fixture(path: str | Path) -> dict[str, list[FixtureEntry]]:
    """Parse a fixture file into ordered entries grouped by section."""
    sections: dict[str, list[FixtureEntry]] = {}
    current = ""
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            sections.setdefault(current, [])
            continue
        parts = line.split("|", 2)
        if len(parts) != 3:
            raise FixtureError(f"{path}:{lineno}: expected 'name | locator | payload'")
        name, locator, payload = (part.strip() for part in parts)
        if not name or not payload:
            raise FixtureError(f"{path}:{lineno}: empty name or payload")
        sections.setdefault(current, []).append(FixtureEntry(current, name, locator, payload))
    return sections
