import json
import logging
import unittest
from unittest import mock

from hyperfan.caching import MemoryCache, RedisCache
from hyperfan.config import CacheConfig

# Configure logging
logging.basicConfig(level=logging.DEBUG)


class TestMemoryCache(unittest.TestCase):
    def setUp(self) -> None:
        self.cache = MemoryCache()

    def test_set_get(self) -> None:
        self.assertIsNone(self.cache.get("missing"))
        self.cache.set("key", {"lambda": 1.0})
        self.assertEqual(self.cache.get("key"), {"lambda": 1.0})
        self.assertEqual(len(self.cache), 1)

    def test_ttl(self) -> None:
        with mock.patch("hyperfan.caching.memory_cache.time.time", return_value=100.0):
            self.cache.set("key", {"lambda": 1.0}, ttl=10)
        with mock.patch("hyperfan.caching.memory_cache.time.time", return_value=105.0):
            self.assertEqual(self.cache.get("key"), {"lambda": 1.0})
        with mock.patch("hyperfan.caching.memory_cache.time.time", return_value=111.0):
            self.assertIsNone(self.cache.get("key"))
        self.assertEqual(len(self.cache), 0)

    def test_clear(self) -> None:
        self.cache.set("a", {})
        self.cache.set("b", {})
        self.cache.clear()
        self.assertEqual(len(self.cache), 0)

    def test_evicts_least_recently_used(self) -> None:
        cache = MemoryCache(max_entries=2)
        cache.set("a", {"lambda": 1.0})
        cache.set("b", {"lambda": 2.0})
        self.assertIsNotNone(cache.get("a"))
        cache.set("c", {"lambda": 3.0})
        self.assertIsNone(cache.get("b"))
        self.assertEqual(cache.get("a"), {"lambda": 1.0})
        self.assertEqual(cache.get("c"), {"lambda": 3.0})
        self.assertEqual((cache.hits, cache.misses), (3, 1))

    def test_invalid_capacity(self) -> None:
        with self.assertRaises(ValueError):
            MemoryCache(max_entries=0)


class TestRedisCache(unittest.TestCase):
    def setUp(self) -> None:
        patcher = mock.patch("hyperfan.caching.redis_cache.Redis")
        self.redis_class = patcher.start()
        self.addCleanup(patcher.stop)
        self.client = self.redis_class.return_value
        self.cache = RedisCache(host="redis.local", port=6380, db=2)

    def test_connects_with_settings(self) -> None:
        self.redis_class.assert_called_once_with(host="redis.local", port=6380, db=2)

    def test_set_with_and_without_ttl(self) -> None:
        self.cache.set("key", {"lambda": 1.5}, ttl=30)
        self.client.setex.assert_called_once_with("hyperfan:key", 30, json.dumps({"lambda": 1.5}))
        self.cache.set("other", {"lambda": 2.5})
        self.client.set.assert_called_once_with("hyperfan:other", json.dumps({"lambda": 2.5}))

    def test_get(self) -> None:
        self.client.get.return_value = b'{"lambda": 1.5}'
        self.assertEqual(self.cache.get("key"), {"lambda": 1.5})
        self.client.get.assert_called_with("hyperfan:key")
        self.client.get.return_value = None
        self.assertIsNone(self.cache.get("key"))

    def test_clear_deletes_prefixed_keys(self) -> None:
        self.client.scan_iter.return_value = iter([b"hyperfan:a", b"hyperfan:b"])
        self.cache.clear()
        self.client.scan_iter.assert_called_once_with(match="hyperfan:*")
        self.client.delete.assert_called_once_with(b"hyperfan:a", b"hyperfan:b")


class TestCacheConfig(unittest.TestCase):
    def setUp(self) -> None:
        self.config = CacheConfig()

    def test_default_is_memory(self) -> None:
        self.assertIsInstance(self.config.get_cache(), MemoryCache)

    def test_set_and_disable(self) -> None:
        with mock.patch("hyperfan.caching.redis_cache.Redis"):
            self.config.set_cache("redis", host="h", port=1, db=3)
            self.assertIsInstance(self.config.get_cache(), RedisCache)
        self.config.disable_cache()
        self.assertIsNone(self.config.get_cache())

    def test_unknown_type(self) -> None:
        with self.assertRaises(ValueError):
            self.config.create_cache("disk")  # type: ignore[arg-type]


if __name__ == "__main__":
    unittest.main()
