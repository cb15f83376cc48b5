import threading
import time
from collections import OrderedDict
from typing import Any, Optional

from .base import BaseCache

_Entry = tuple[dict[str, Any], Optional[float]]


class MemoryCache(BaseCache):
    """Thread-safe in-process cache of solver results.

    Entries are kept in least-recently-used order. When ``max_entries`` is set,
    storing a new result evicts the stalest one, so a long scan cannot grow the
    cache without bound. Expired entries are dropped when read.
    """

    def __init__(self, max_entries: Optional[int] = None) -> None:
        """Initialize the MemoryCache.

        Args:
            max_entries (Optional[int]): Capacity. Defaults to unbounded.

        Returns
        -------
            None

        """
        if max_entries is not None and max_entries < 1:
            msg = f"max_entries must be positive, got {max_entries}"
            raise ValueError(msg)
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0
        self._entries: OrderedDict[str, _Entry] = OrderedDict()
        self._lock = threading.Lock()

    def __len__(self) -> int:
        """Number of stored entries, expired ones included until they are read."""
        with self._lock:
            return len(self._entries)

    def get(self, key: str) -> Optional[dict[str, Any]]:
        """Look a result up and mark it as recently used.

        Args:
            key (str): Cache key of the solve.

        Returns:
            Optional[dict[str, Any]]: The stored payload, or None when missing or expired.

        """
        with self._lock:
            entry = self._entries.get(key)
            if entry is not None and entry[1] is not None and entry[1] < time.time():
                del self._entries[key]
                entry = None
            if entry is None:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return entry[0]

    def set(self, key: str, value: dict[str, Any], ttl: Optional[int] = None) -> None:
        """Store a result, evicting the least recently used one when full.

        Args:
            key (str): Cache key of the solve.
            value (dict[str, Any]): The payload.
            ttl (Optional[int]): Seconds until expiry. Defaults to None.

        """
        with self._lock:
            self._entries[key] = (value, time.time() + ttl if ttl else None)
            self._entries.move_to_end(key)
            while self.max_entries is not None and len(self._entries) > self.max_entries:
                self._entries.popitem(last=False)

    def clear(self) -> None:
        """Drop every entry and reset the hit counters."""
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0
