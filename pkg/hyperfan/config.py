from __future__ import annotations
from typing import Literal

from .caching.memory_cache import MemoryCache
from .caching.redis_cache import RedisCache

# Supported cache types
CacheType = Literal["memory", "redis"]


class CacheConfig:
    """Configuration class for managing the process-wide result cache.

    This avoids the use of global variables.
    """

    def __init__(self) -> None:
        self._cache: MemoryCache | RedisCache | None = MemoryCache()

    def create_cache(
        self,
        cache_type: CacheType,
        host: str = "localhost",
        port: int = 6379,
        db: int = 0,
    ) -> MemoryCache | RedisCache:
        """Create a cache instance based on the type.

        Args:
            cache_type (CacheType): The type of cache to create.
            host (str): Redis host. Defaults to "localhost".
            port (int): Redis port. Defaults to 6379.
            db (int): Redis database number. Defaults to 0.

        Returns:
            MemoryCache | RedisCache: The created cache instance.

        Raises:
            ValueError: If the cache type is unknown.

        """
        if cache_type == "redis":
            return RedisCache(host=host, port=port, db=db)
        if cache_type == "memory":
            return MemoryCache()
        msg = f"Unknown cache type: {cache_type!r}"
        raise ValueError(msg)

    def set_cache(
        self,
        cache_type: CacheType,
        host: str = "localhost",
        port: int = 6379,
        db: int = 0,
    ) -> None:
        """Set the cache instance based on the configured cache type.

        Args:
            cache_type (CacheType): The type of cache to set.
            host (str): Redis host. Defaults to "localhost".
            port (int): Redis port. Defaults to 6379.
            db (int): Redis database number. Defaults to 0.

        """
        self._cache = self.create_cache(cache_type, host, port, db)

    def get_cache(self) -> MemoryCache | RedisCache | None:
        """Get the cache instance.

        Returns
        -------
            MemoryCache | RedisCache | None: The current cache instance.

        """
        return self._cache

    def disable_cache(self) -> None:
        """Drop the global cache; cached requests then run uncached with a warning."""
        self._cache = None


# Singleton instance of CacheConfig
cache_config = CacheConfig()
