"""Result caches for the spectral solver.

Solving the same hypergraph twice under the same solver configuration gives
bit-identical results, so the solver pool can skip repeated work by keeping
results in a cache. Two backends are provided: an in-process dictionary and a
Redis database that survives between runs.

Classes:
    - BaseCache: Abstract base class for caches.
    - MemoryCache: Thread-safe in-process LRU cache with TTL support.
    - RedisCache: Redis-backed cache storing JSON values.

.. code-block:: python

    from hyperfan.caching import MemoryCache

    cache = MemoryCache()
    cache.set("key", {"lambda": 1.0}, ttl=60)
    data = cache.get("key")

"""

from .base import BaseCache
from .memory_cache import MemoryCache
from .redis_cache import RedisCache

__all__ = [
    "BaseCache",
    "MemoryCache",
    "RedisCache",
]
