"""
File-backed store for computed counts, keyed by canonical spec text, n,
and the producing method.

The store is a single JSON document rewritten atomically on save.  A key
is never silently overwritten with a different value: that would mean two
runs of the same method disagreed, which is a corruption signal worth
aborting on.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

TOOL_VERSION = "0.1.0"
ENV_VAR = "PERMRESTRICT_CACHE"
DEFAULT_FILENAME = ".permrestrict_cache.json"


class CacheConflictError(RuntimeError):
    """A cached value differs from a newly computed one for the same key."""


def default_path() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path(DEFAULT_FILENAME)


class CacheStore:
    """Map (spec text, n, method) -> count, persisted as one JSON file."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else default_path()
        self._entries: dict[str, int] = {}
        self._dirty = False
        self._load()

    @staticmethod
    def _key(spec_text: str, n: int, method: str) -> str:
        return f"{spec_text}|{n}|{method}"

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            doc = json.loads(self.path.read_text())
            entries = doc["entries"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CacheConflictError(
                f"cache file {self.path} is not readable: {exc}") from exc
        self._entries = {str(k): int(v) for k, v in entries.items()}

    def get(self, spec_text: str, n: int, method: str = "brute") -> int | None:
        return self._entries.get(self._key(spec_text, n, method))

    def put(self, spec_text: str, n: int, value: int,
            method: str = "brute") -> None:
        key = self._key(spec_text, n, method)
        old = self._entries.get(key)
        if old is not None:
            if old != value:
                raise CacheConflictError(
                    f"cache conflict for {key}: stored {old}, computed {value}")
            return
        self._entries[key] = value
        self._dirty = True

    def save(self) -> None:
        """Write the store if anything changed; the rewrite is atomic."""
        if not self._dirty:
            return
        doc = {"tool": "permrestrict", "version": TOOL_VERSION,
               "entries": dict(sorted(self._entries.items()))}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent),
                                   prefix=self.path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(doc, handle, indent=1)
                handle.write("\n")
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        self._dirty = False

    def __len__(self) -> int:
        return len(self._entries)
