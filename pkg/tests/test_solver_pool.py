import logging
import unittest

from hyperfan import exceptions
from hyperfan.caching import MemoryCache
from hyperfan.config import cache_config
from hyperfan.models.spectral import PerronResult, SolverConfig
from hyperfan.outerplanar import enumerate_triangulations, fan, to_hypergraph
from hyperfan.solver_pool import SolverPool, solve_payload
from hyperfan.spectral import spectral_radius

# Configure logging
logging.basicConfig(level=logging.DEBUG)


class TestSolverPool(unittest.TestCase):
    def setUp(self) -> None:
        self.cache = MemoryCache()
        self.pool = SolverPool(cache=self.cache)

    def test_solve_matches_direct_call(self) -> None:
        with self.pool:
            result = self.pool.solve(fan(6))
        self.assertEqual(result, spectral_radius(fan(6)))

    def test_cache_hits(self) -> None:
        first = self.pool.solve(fan(5), use_cache=True)
        self.assertEqual(len(self.cache), 1)
        second = self.pool.solve(fan(5), use_cache=True)
        self.assertEqual(first, second)
        self.assertEqual(len(self.cache), 1)
        self.pool.solve(fan(5), use_cache=False)
        self.assertEqual(len(self.cache), 1)

    def test_cache_key_depends_on_settings(self) -> None:
        SolverPool(SolverConfig(seed=1), cache=self.cache).solve(fan(5), use_cache=True)
        SolverPool(SolverConfig(seed=2), cache=self.cache).solve(fan(5), use_cache=True)
        self.assertEqual(len(self.cache), 2)

    def test_failures_are_not_cached(self) -> None:
        pool = SolverPool(SolverConfig(max_iter=1, tol=1e-15), cache=self.cache)
        with self.assertRaises(exceptions.ConvergenceError):
            pool.solve(fan(6), use_cache=True)
        self.assertEqual(len(self.cache), 0)

    def test_solve_many_keeps_order_and_failures(self) -> None:
        hypergraphs = [to_hypergraph(T) for T in enumerate_triangulations(7, dedupe=True)]
        results = self.pool.solve_many(hypergraphs)
        self.assertEqual(len(results), 4)
        for hypergraph, result in zip(hypergraphs, results):
            self.assertEqual(result, spectral_radius(hypergraph))
        failing = SolverPool(SolverConfig(max_iter=1, tol=1e-15)).solve_many(hypergraphs[:2])
        self.assertTrue(all(isinstance(r, exceptions.ConvergenceError) for r in failing))

    def test_parallel_matches_serial(self) -> None:
        hypergraphs = [to_hypergraph(T) for T in enumerate_triangulations(8, dedupe=True)]
        serial = SolverPool().solve_many(hypergraphs)
        with SolverPool(workers=2) as pool:
            parallel = pool.solve_many(hypergraphs)
        self.assertEqual(serial, parallel)

    def test_not_started(self) -> None:
        pool = SolverPool(workers=2)
        with self.assertRaises(RuntimeError):
            pool.solve(fan(5))

    def test_invalid_workers(self) -> None:
        with self.assertRaises(exceptions.InvalidParameterError):
            SolverPool(workers=0)

    def test_save_convert(self) -> None:
        with self.assertRaises(exceptions.ConversionError) as ctx:
            self.pool.save_convert({"lambda": -1.0}, PerronResult)
        self.assertIs(ctx.exception.model_type, PerronResult)
        self.assertEqual(ctx.exception.initial_data, {"lambda": -1.0})

    def test_check_errors(self) -> None:
        self.pool._check_errors({"code": 0, "result": {}})  # noqa: SLF001
        with self.assertRaises(exceptions.ConvergenceError) as ctx:
            self.pool._check_errors(  # noqa: SLF001
                {"code": 2003, "msg": "stuck", "details": {"bracket_low": 1.0, "bracket_high": 2.0, "iterations": 5}},
            )
        self.assertEqual(ctx.exception.bracket, (1.0, 2.0))
        with self.assertRaises(exceptions.HyperfanError) as unknown:
            self.pool._check_errors({"code": 9999, "msg": "?"})  # noqa: SLF001
        self.assertEqual(unknown.exception.code, 9999)

    def test_global_cache(self) -> None:
        self.addCleanup(cache_config.set_cache, "memory")
        cache_config.disable_cache()
        with self.assertLogs("hyperfan", level="WARNING"):
            SolverPool().solve(fan(4), use_cache=True)
        cache_config.set_cache("memory")
        pool = SolverPool()
        self.assertIs(pool.cache, cache_config.get_cache())


class TestSolvePayload(unittest.TestCase):
    def test_success(self) -> None:
        payload = {"n": 4, "r": 3, "edges": [[0, 1, 2], [0, 2, 3]], "config": SolverConfig().model_dump(mode="json")}
        response = solve_payload(payload)
        self.assertEqual(response["code"], 0)
        self.assertAlmostEqual(response["result"]["lambda"], 2.0 ** (2.0 / 3.0), delta=1e-8)

    def test_invalid_hypergraph(self) -> None:
        payload = {"n": 3, "r": 3, "edges": [[0, 1, 5]], "config": {}}
        response = solve_payload(payload)
        self.assertEqual(response["code"], exceptions.InvalidHypergraphError.CODE)


if __name__ == "__main__":
    unittest.main()
