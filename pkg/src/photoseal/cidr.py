"""Camera ID Register: a durable append-only map from photo IDs to camera IDs.

The log is newline-delimited JSON, one record per line:

    {"photo_id": "<40 uppercase hex>", "camera_id": "<text>", "registered_at": "<ISO-8601 UTC>"}

Replaying the log reconstructs the in-memory index exactly; a torn final
line (crash mid-write) is rejected as corruption.  Camera IDs are secrets:
the log file should be readable by the service process only, and lookup
results must never leave it -- only verification verdicts do.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .crypto import PhotoId, derive_photo_id
from .errors import AlreadyRegistered, NotFound, StoreError


@dataclass(frozen=True)
class CidrRecord:
    photo_id: PhotoId
    camera_id: str
    registered_at: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "photo_id": self.photo_id.hex,
                "camera_id": self.camera_id,
                "registered_at": self.registered_at,
            }
        )


class CidrStore:
    """Append-only register with a single serialized writer.

    Reads go through an in-memory index rebuilt from the log at startup;
    the lock serializes writers, and records become visible to readers
    only after the line is durably appended, so no reader ever observes
    a torn record.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._index: dict[str, CidrRecord] = {}
        self._replay()

    def _replay(self) -> None:
        if not self.path.exists():
            return
        try:
            text = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise StoreError(f"cannot read register log {self.path}: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                record = CidrRecord(
                    photo_id=PhotoId.from_hex(obj["photo_id"]),
                    camera_id=obj["camera_id"],
                    registered_at=obj["registered_at"],
                )
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise StoreError(f"corrupt register record at line {lineno}: {exc}") from exc
            self._index[record.photo_id.hex] = record

    def __len__(self) -> int:
        return len(self._index)

    def register(self, camera_id: str) -> CidrRecord:
        """Derive the photo ID, append the record, and return it."""
        photo_id = derive_photo_id(camera_id)
        record = CidrRecord(
            photo_id=photo_id,
            camera_id=camera_id,
            registered_at=datetime.now(timezone.utc).isoformat(),
        )
        with self._lock:
            if photo_id.hex in self._index:
                raise AlreadyRegistered(f"photo ID {photo_id.hex} already registered")
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(record.to_json() + "\n")
                    fh.flush()
            except OSError as exc:
                raise StoreError(f"cannot append to register log: {exc}") from exc
            self._index[photo_id.hex] = record
        return record

    def lookup(self, photo_id: PhotoId | str) -> str:
        """Camera ID for a photo ID; raises NotFound when absent."""
        key = photo_id.hex if isinstance(photo_id, PhotoId) else str(photo_id).upper()
        try:
            return self._index[key].camera_id
        except KeyError:
            raise NotFound(f"photo ID {key} not registered") from None

    def healthy(self) -> bool:
        """Whether the backing log is still readable (file may not exist yet)."""
        if not self.path.exists():
            return len(self._index) == 0
        try:
            with open(self.path, "rb"):
                return True
        except OSError:
            return False
