"""Reduced-basis cache: an in-memory map with an optional on-disk mirror.

Keys combine the ring descriptor, a hash of the generating data, and the
order descriptor.  Verification suites recompute the same bases heavily,
so hits matter; the disk mirror (text JSON, one file per basis) makes them
survive across runs.  Single-writer/many-reader: all access goes through
one lock.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading

_ENV_VAR = "TROPCM_CACHE"


def digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


class GBCache:
    def __init__(self, directory=None):
        self.directory = directory
        self._mem = {}
        self._lock = threading.Lock()

    def _path(self, key):
        return os.path.join(self.directory, key + ".json")

    def get(self, key):
        """Cached basis strings for ``key``, or None."""
        with self._lock:
            hit = self._mem.get(key)
            if hit is not None:
                return hit
            if self.directory:
                path = self._path(key)
                if os.path.exists(path):
                    with open(path, "r", encoding="utf-8") as fh:
                        data = json.load(fh)
                    self._mem[key] = data["basis"]
                    return data["basis"]
        return None

    def put(self, key, basis_strings, meta=None):
        with self._lock:
            self._mem[key] = list(basis_strings)
            if self.directory:
                os.makedirs(self.directory, exist_ok=True)
                payload = {"basis": list(basis_strings)}
                if meta:
                    payload.update(meta)
                tmp = self._path(key) + ".tmp"
                with open(tmp, "w", encoding="utf-8") as fh:
                    json.dump(payload, fh, indent=1, sort_keys=True)
                os.replace(tmp, self._path(key))

    def clear_memory(self):
        with self._lock:
            self._mem.clear()


_default = GBCache(directory=os.environ.get(_ENV_VAR) or None)


def default_cache() -> GBCache:
    return _default


def set_cache_directory(directory):
    """Point the shared cache at ``directory`` (None disables persistence)."""
    _default.directory = directory
