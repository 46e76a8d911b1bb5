"""Append-only JSON-lines result cache."""

from __future__ import annotations

import fcntl
import json
import logging
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable, Sequence

log = logging.getLogger(__name__)

ENV_VAR = "COVERTOOL_CACHE"


def resolve_cache_path(explicit: str | os.PathLike | None = None) -> Path | None:
    """An explicit path wins, then $COVERTOOL_CACHE; None disables caching."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def _key_string(key: Sequence[Any]) -> str:
    return json.dumps(list(key), separators=(",", ":"))


class ResultCache:
    """Records ``{"key": [...], "value": ..., "created_at": ...}``, one per line.

    Records are never rewritten.  When a key occurs more than once the first
    record wins.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._index: dict[str, Any] | None = None
        self.hits = 0
        self.misses = 0

    def _load(self) -> dict[str, Any]:
        if self._index is not None:
            return self._index
        index: dict[str, Any] = {}
        if self.path.exists():
            with open(self.path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    if not line.strip():
                        continue
                    try:
                        rec = json.loads(line)
                        ks = _key_string(rec["key"])
                        value = rec["value"]
                    except (ValueError, KeyError, TypeError) as exc:
                        log.warning("%s:%d: skipping corrupt cache line (%s)", self.path, lineno, exc)
                        continue
                    index.setdefault(ks, value)
        self._index = index
        return index

    def get(self, key: Sequence[Any], default: Any = None) -> Any:
        return self._load().get(_key_string(key), default)

    def __contains__(self, key: Sequence[Any]) -> bool:
        return _key_string(key) in self._load()

    def put(self, key: Sequence[Any], value: Any) -> None:
        index = self._load()
        ks = _key_string(key)
        if ks in index:
            return
        record = {"key": list(key), "value": value, "created_at": datetime.now(timezone.utc).isoformat()}
        line = json.dumps(record, separators=(",", ":")) + "\n"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(line)
                fh.flush()
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
        index[ks] = value

    def get_or_compute(self, key: Sequence[Any], compute: Callable[[], Any]) -> Any:
        index = self._load()
        ks = _key_string(key)
        if ks in index:
            self.hits += 1
            return index[ks]
        self.misses += 1
        value = compute()
        self.put(key, value)
        return value

    def reload(self) -> None:
        self._index = None


def cache_get_or_compute(path: str | os.PathLike, key: Sequence[Any], compute: Callable[[], Any]) -> Any:
    return ResultCache(path).get_or_compute(key, compute)
