"""
Corpus registry: loads corpus_registry.json and provides lookup helpers for
the named desk-scale presentations used by the CLI and the tests.
"""
import json
import logging
from pathlib import Path
from typing import Any

from models.errors import PreconditionError
from models.presentation import Presentation
from presentation.parser import DEFAULT_NAME, parse_presentation

logger = logging.getLogger(__name__)

# Default path to registry relative to this file
DEFAULT_REGISTRY_PATH = Path(__file__).parent / "corpus_registry.json"

CORPUS_PREFIX = "corpus:"


def load_registry(registry_path: str | Path | None = None) -> dict[str, Any]:
    """Load the corpus registry from JSON file."""
    path = Path(registry_path) if registry_path else DEFAULT_REGISTRY_PATH
    if not path.is_file():
        logger.warning("corpus registry not found: %s", path)
        return {"entries": []}
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def get_entries(registry_path: str | Path | None = None) -> list[dict[str, Any]]:
    """Return all enabled corpus entries."""
    registry = load_registry(registry_path)
    return [e for e in registry.get("entries", []) if e.get("enabled", True)]


def get_entry_by_id(entry_id: str, registry_path: str | Path | None = None) -> dict[str, Any] | None:
    for entry in get_entries(registry_path):
        if entry.get("id") == entry_id:
            return entry
    return None


def list_entry_ids(registry_path: str | Path | None = None) -> list[str]:
    return [e["id"] for e in get_entries(registry_path) if e.get("id")]


def entries_with_tag(tag: str, registry_path: str | Path | None = None) -> list[dict[str, Any]]:
    return [e for e in get_entries(registry_path) if tag in e.get("tags", [])]


def get_presentation(entry_id: str, registry_path: str | Path | None = None) -> Presentation:
    """
    Parse the `.grp` text of a corpus entry. An entry whose text carries no
    `name:` line is named after the entry.
    """
    if entry_id.startswith(CORPUS_PREFIX):
        entry_id = entry_id[len(CORPUS_PREFIX):]
    entry = get_entry_by_id(entry_id, registry_path)
    if entry is None:
        raise PreconditionError(f"no corpus entry {entry_id!r}")
    p = parse_presentation(entry["grp"])
    if p.name == DEFAULT_NAME:
        p = p.model_copy(update={"name": entry.get("name", entry_id)})
    return p
