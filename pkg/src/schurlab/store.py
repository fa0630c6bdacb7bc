"""Result records and the on-disk cache.

The cache lives in ``$SCHURLAB_CACHE`` (or a directory passed explicitly).
Entries are keyed by the digest of the canonical command + inputs and written
atomically: temp file in the same directory, then ``os.replace``.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

ENV_VAR = "SCHURLAB_CACHE"


def canonical_json(obj) -> str:
    """Sorted keys, compact separators, no floats expected."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(command, inputs) -> str:
    return hashlib.sha256(canonical_json([command, inputs]).encode()).hexdigest()


@dataclass
class ResultRecord:
    command: str
    inputs_digest: str
    verdict: object
    tool_version: str = __version__
    timestamp: int = 0

    def to_json(self):
        return {"command": self.command, "inputs_digest": self.inputs_digest,
                "verdict": self.verdict, "tool_version": self.tool_version,
                "timestamp": self.timestamp}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["command"], obj["inputs_digest"], obj["verdict"],
                   obj["tool_version"], obj["timestamp"])


class Cache:
    def __init__(self, root=None):
        root = root if root is not None else os.environ.get(ENV_VAR)
        self.root = Path(root) if root else None

    @property
    def enabled(self):
        return self.root is not None

    def _path(self, key):
        return self.root / key[:2] / f"{key}.json"

    def get(self, key):
        """The cached record, or None (missing, disabled, corrupt or stale version)."""
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            rec = ResultRecord.from_json(json.loads(path.read_text()))
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path, exc)
            return None
        if rec.inputs_digest != key:
            log.warning("cache entry %s has mismatched digest; recomputing", path)
            return None
        if rec.tool_version != __version__:
            return None
        return rec

    def put(self, rec):
        if not self.enabled:
            return
        path = self._path(rec.inputs_digest)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical_json(rec.to_json()))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def cached(cache, command, inputs, compute):
    """Return (verdict, hit).  ``compute`` must return a JSON-ready object."""
    key = digest(command, inputs)
    rec = cache.get(key)
    if rec is not None:
        return rec.verdict, True
    verdict = compute()
    # round-trip so that fresh and cached verdicts are the same JSON value
    verdict = json.loads(canonical_json(verdict))
    cache.put(ResultRecord(command, key, verdict, __version__, int(time.time())))
    return verdict, False
