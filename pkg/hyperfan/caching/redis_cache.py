import json
from typing import Any, Optional

from redis.client import Redis

from .base import BaseCache


class RedisCache(BaseCache):
    """Solver results shared across processes through Redis.

    Payloads are stored as JSON under ``prefix``; one database can serve
    several scans as long as their prefixes differ.
    """

    def __init__(
        self,
        host: str = "localhost",
        port: int = 6379,
        db: int = 0,
        prefix: str = "hyperfan:",
    ) -> None:
        """Connect lazily to the given Redis database.

        Args:
            host (str): Server host. Defaults to "localhost".
            port (int): Server port. Defaults to 6379.
            db (int): Database number. Defaults to 0.
            prefix (str): Namespace for every key. Defaults to "hyperfan:".

        """
        self._client = Redis(host=host, port=port, db=db)
        self._prefix = prefix

    def __del__(self) -> None:
        client = getattr(self, "_client", None)
        if client is not None:
            client.close()

    def get(self, key: str) -> Optional[dict[str, Any]]:
        """Decode the payload under ``prefix + key``; None when absent or expired."""
        data = self._client.get(self._prefix + key)
        if data is None:
            return None
        return json.loads(data)  # type: ignore

    def set(self, key: str, value: dict[str, Any], ttl: Optional[int] = None) -> None:
        """Encode ``value`` as JSON, with ``SETEX`` when a ttl is given."""
        data = json.dumps(value)
        if ttl:
            self._client.setex(self._prefix + key, ttl, data)
        else:
            self._client.set(self._prefix + key, data)

    def clear(self) -> None:
        """Delete the keys under this cache's prefix and nothing else."""
        keys = list(self._client.scan_iter(match=f"{self._prefix}*"))
        if keys:
            self._client.delete(*keys)
