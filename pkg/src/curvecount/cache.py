"""Persistent memo store for computed counts.

Keys are the canonical problem texts prefixed by the count family
(X, W, Z and the fibration primitives QQ, HQ, HH, HMQ, SS).  The file
format is one header line ``EGC-CACHE v1`` followed by one
``key<TAB>value`` record per line, UTF-8, LF line endings, keys sorted,
so saves are byte-identical for equal contents.
"""

from __future__ import annotations

import os

MAGIC = "EGC-CACHE v1"


class CacheConflict(RuntimeError):
    """Two different values were recorded for the same key."""


class InvalidCacheFile(ValueError):
    """The file is not a cache file or is corrupt."""


class MemoStore:
    def __init__(self):
        self._data: dict[str, int] = {}

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: str) -> bool:
        return key in self._data

    def items(self):
        return self._data.items()

    def lookup(self, key: str):
        return self._data.get(key)

    def store(self, key: str, value: int) -> int:
        old = self._data.get(key)
        if old is not None and old != value:
            raise CacheConflict(f"key {key!r} already holds {old}, refusing to store {value}")
        self._data[key] = value
        return value

    def load(self, path) -> int:
        """Merge records from a cache file; conflicting values are fatal.
        Returns the number of records read."""
        with open(path, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
        lines = text.split("\n")
        if not lines or lines[0] != MAGIC:
            raise InvalidCacheFile(f"{path}: missing {MAGIC!r} header")
        count = 0
        for lineno, line in enumerate(lines[1:], start=2):
            if line == "":
                continue
            key, sep, value = line.partition("\t")
            if not sep:
                raise InvalidCacheFile(f"{path}:{lineno}: expected key<TAB>value")
            try:
                self.store(key, int(value))
            except ValueError:
                raise InvalidCacheFile(f"{path}:{lineno}: bad integer {value!r}") from None
            count += 1
        return count

    def save(self, path) -> None:
        body = "".join(f"{key}\t{self._data[key]}\n" for key in sorted(self._data))
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "w", encoding="utf-8", newline="") as fh:
            fh.write(MAGIC + "\n" + body)
        os.replace(tmp, path)
