"""Versioned JSON result cache with atomic replacement on write."""

from __future__ import annotations

import json
import os
import tempfile
import time
from pathlib import Path
from typing import Any, Dict, Optional

CACHE_VERSION = 1
CACHE_FILE = "satseq-cache.json"


class ResultCache:
    """Key -> payload.  Entries from another version are ignored."""

    def __init__(self, directory: str | os.PathLike, version: int = CACHE_VERSION):
        self.directory = Path(directory)
        self.path = self.directory / CACHE_FILE
        self.version = version
        self.entries: Dict[str, Dict[str, Any]] = {}
        self.hits = 0
        self.misses = 0
        self._dirty = False
        self._load()

    def _load(self) -> None:
        try:
            data = json.loads(self.path.read_text())
        except (OSError, json.JSONDecodeError):
            return
        if isinstance(data, dict) and data.get("version") == self.version:
            self.entries = data.get("entries", {})

    def get(self, key: str) -> Optional[Any]:
        entry = self.entries.get(key)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        return entry["value"]

    def put(self, key: str, value: Any) -> None:
        self.entries[key] = {"value": value, "timestamp": time.time()}
        self._dirty = True

    def __len__(self) -> int:
        return len(self.entries)

    def flush(self) -> None:
        if not self._dirty:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"version": self.version, "entries": self.entries}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".cache-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self._dirty = False
