from abc import ABC, abstractmethod
from typing import Any, Optional


class BaseCache(ABC):
    """Interface shared by the solver result caches.

    Keys are built by :class:`~hyperfan.SolverPool` from the canonical
    hypergraph and the solver settings. Values are ``PerronResult`` payloads
    as plain JSON-compatible dicts.
    """

    @abstractmethod
    def get(self, key: str) -> Optional[dict[str, Any]]:
        """Return the stored payload for ``key``, or None on a miss."""

    @abstractmethod
    def set(self, key: str, value: dict[str, Any], ttl: Optional[int] = None) -> None:
        """Store ``value`` under ``key``.

        Args:
            key (str): Cache key of the solve.
            value (dict[str, Any]): The result payload.
            ttl (Optional[int]): Lifetime in seconds. None keeps the entry until evicted.

        """

    def clear(self) -> None:  # noqa: B027
        """Drop every entry. Backends without a cheap flush keep this as a no-op."""
