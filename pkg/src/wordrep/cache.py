"""Append-only JSON-lines store of classification results.

Each line is one object with the fields
``source, n, status, method, elapsed_ms`` and optionally ``artifact``.
Reads return the newest record for a ``(source, n)`` key. Lines appended
by other processes are picked up on the next read.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from .errors import CorruptRecord

log = logging.getLogger(__name__)

STATUSES = ("representable", "non_representable")
_FIELDS = {"source", "n", "status", "method", "elapsed_ms"}


@dataclass
class CacheRecord:
    source: str
    n: int
    status: str
    method: str
    elapsed_ms: float
    artifact: Optional[Any] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise CorruptRecord(f"unknown status {self.status!r}")
        if self.status == "non_representable" and not (
            self.method == "semi_transitive_search" or self.method.startswith("sieve:d=")
        ):
            raise CorruptRecord(f"a refutation cannot come from method {self.method!r}")
        if self.method.startswith("sieve:") and not (
            isinstance(self.artifact, dict) and "sub_source" in self.artifact and "sub_n" in self.artifact
        ):
            raise CorruptRecord("sieve records must name the sub-instance they rely on")

    @property
    def key(self) -> Tuple[str, int]:
        return (self.source, self.n)

    @property
    def representable(self) -> bool:
        return self.status == "representable"

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "source": self.source,
            "n": self.n,
            "status": self.status,
            "method": self.method,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.artifact is not None:
            d["artifact"] = self.artifact
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, ensure_ascii=False)

    @classmethod
    def from_dict(cls, obj: Any) -> "CacheRecord":
        if not isinstance(obj, dict):
            raise CorruptRecord("record is not a JSON object")
        keys = set(obj)
        if not _FIELDS <= keys or keys - _FIELDS - {"artifact"}:
            raise CorruptRecord(f"unexpected field set {sorted(keys)}")
        if not isinstance(obj["n"], int) or not isinstance(obj["source"], str):
            raise CorruptRecord("bad types for source/n")
        return cls(
            source=obj["source"],
            n=obj["n"],
            status=obj["status"],
            method=str(obj["method"]),
            elapsed_ms=float(obj["elapsed_ms"]),
            artifact=obj.get("artifact"),
        )

    @classmethod
    def from_json(cls, line: str) -> "CacheRecord":
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorruptRecord(str(exc)) from None
        return cls.from_dict(obj)


class ResultCache:
    """In-memory index over an optional JSONL file."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._data: Dict[Tuple[str, int], CacheRecord] = {}
        self._offset = 0
        self.skipped = 0
        self._refresh()

    def _refresh(self) -> None:
        if self.path is None or not self.path.exists():
            return
        with self.path.open("rb") as fh:
            fh.seek(self._offset)
            chunk = fh.read()
        # leave a trailing partial line for the next refresh
        end = chunk.rfind(b"\n") + 1
        self._offset += end
        for raw in chunk[:end].splitlines():
            line = raw.decode("utf-8", errors="replace").strip()
            if not line:
                continue
            try:
                rec = CacheRecord.from_json(line)
            except CorruptRecord as exc:
                self.skipped += 1
                log.warning("skipping corrupt cache line in %s: %s", self.path, exc)
                continue
            self._data[rec.key] = rec

    def get(self, source: str, n: int) -> Optional[CacheRecord]:
        self._refresh()
        return self._data.get((source, n))

    def put(self, record: CacheRecord) -> None:
        self._data[record.key] = record
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(record.to_json() + "\n")

    def records(self) -> list[CacheRecord]:
        self._refresh()
        return list(self._data.values())

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return self.get(*key) is not None
