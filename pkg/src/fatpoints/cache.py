"""Append-only JSON-lines store for command results."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "FATPOINTS_CACHE"


def request_hash(command: str, inputs: dict, seed: int, field: str) -> str:
    blob = json.dumps({"command": command, "inputs": inputs, "seed": seed, "field": field}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass(frozen=True)
class ResultRecord:
    key: str
    payload: dict
    created: float
    version: str = __version__

    def to_line(self) -> str:
        return json.dumps(
            {"hash": self.key, "version": self.version, "created": self.created, "payload": self.payload},
            sort_keys=True,
        )


class ResultCache:
    """Single-writer cache; readers skip malformed lines and stale versions."""

    def __init__(self, path, version: str = __version__):
        self.path = Path(path)
        self.version = version

    @classmethod
    def from_env(cls, path=None) -> "ResultCache | None":
        path = path or os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def _records(self):
        try:
            text = self.path.read_text()
        except FileNotFoundError:
            return
        except OSError as exc:
            raise OSError(f"cannot read cache {self.path}: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                yield rec["hash"], rec["version"], rec["payload"]
            except (json.JSONDecodeError, KeyError, TypeError):
                log.warning("ignoring malformed cache line %d in %s", lineno, self.path)

    def lookup(self, key: str) -> dict | None:
        found = None
        for h, version, payload in self._records():
            if h == key and version == self.version:
                found = payload
        return found

    def store(self, key: str, payload: dict) -> ResultRecord:
        rec = ResultRecord(key, payload, time.time(), self.version)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(rec.to_line() + "\n")
        except OSError as exc:
            raise OSError(f"cannot write cache {self.path}: {exc}") from exc
        return rec
