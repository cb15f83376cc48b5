import logging
import unittest
from itertools import combinations

import numpy as np

from hyperfan import exceptions
from hyperfan.models.hypergraph import UniformHypergraph
from hyperfan.models.spectral import Normalization, PerronResult, SolverConfig
from hyperfan.outerplanar import fan, random_triangulation, to_hypergraph
from hyperfan.spectral import (
    apply_adjacency,
    brute_force_lambda,
    collatz_wielandt,
    eigen_residual,
    normalize,
    poly_eval,
    rayleigh,
    spectral_radius,
)

# Configure logging
logging.basicConfig(level=logging.DEBUG)

FAN4_LAMBDA = 2.0 ** (2.0 / 3.0)


def random_hypergraph(rng: np.random.Generator) -> UniformHypergraph:
    n = int(rng.integers(4, 12))
    r = int(rng.integers(2, 5))
    candidates = list(combinations(range(n), r))
    count = int(rng.integers(1, min(len(candidates), 3 * n) + 1))
    chosen = rng.choice(len(candidates), size=count, replace=False)
    return UniformHypergraph.from_edges(n, [candidates[int(i)] for i in chosen], r=r)


class TestOperator(unittest.TestCase):
    def test_fan4_on_ones(self) -> None:
        H = fan(4)
        np.testing.assert_allclose(apply_adjacency(H, np.ones(4)), [2.0, 1.0, 2.0, 1.0])
        self.assertAlmostEqual(poly_eval(H, np.ones(4)), 6.0)
        self.assertAlmostEqual(rayleigh(H, np.ones(4)), 1.5)

    def test_duality(self) -> None:
        rng = np.random.default_rng(0)
        for _ in range(1000):
            H = random_hypergraph(rng)
            x = rng.random(H.n)
            lhs = float(np.dot(x, apply_adjacency(H, x)))
            rhs = poly_eval(H, x)
            self.assertLessEqual(abs(lhs - rhs), 1e-12 * max(abs(rhs), 1.0))

    def test_gradient(self) -> None:
        rng = np.random.default_rng(1)
        h = 1e-6
        for _ in range(1000):
            H = random_hypergraph(rng)
            x = rng.random(H.n) + 0.1
            i = int(rng.integers(H.n))
            step = np.zeros(H.n)
            step[i] = h
            numeric = (poly_eval(H, x + step) - poly_eval(H, x - step)) / (2 * h)
            exact = H.r * apply_adjacency(H, x)[i]
            self.assertLessEqual(abs(numeric - exact), 1e-6 * max(abs(exact), 1.0))

    def test_dimension_mismatch(self) -> None:
        with self.assertRaises(exceptions.DimensionMismatchError):
            apply_adjacency(fan(4), [1.0, 1.0, 1.0])
        with self.assertRaises(exceptions.DimensionMismatchError):
            poly_eval(fan(4), np.ones(5))

    def test_invalid_vectors(self) -> None:
        with self.assertRaises(exceptions.InvalidVectorError):
            rayleigh(fan(4), np.zeros(4))
        with self.assertRaises(exceptions.InvalidVectorError):
            rayleigh(fan(4), [1.0, -1.0, 1.0, 1.0])
        with self.assertRaises(exceptions.InvalidVectorError):
            collatz_wielandt(fan(4), [1.0, 0.0, 1.0, 1.0])

    def test_normalize(self) -> None:
        x = normalize([1.0, 2.0, 2.0], 3, Normalization.UNIT_R_NORM)
        self.assertAlmostEqual(float(np.sum(x**3)), 1.0)
        y = normalize([1.0, 4.0, 2.0], 3, Normalization.MAX_ENTRY_ONE)
        np.testing.assert_allclose(y, [0.25, 1.0, 0.5])
        with self.assertRaises(exceptions.InvalidVectorError):
            normalize([0.0, 0.0], 3, Normalization.UNIT_R_NORM)


class TestSpectralRadius(unittest.TestCase):
    def test_single_edge(self) -> None:
        result = spectral_radius(UniformHypergraph.from_edges(3, [[0, 1, 2]]))
        self.assertAlmostEqual(result.lambda_, 1.0, delta=1e-10)
        for value in result.vector:
            self.assertAlmostEqual(value, 3.0 ** (-1.0 / 3.0), delta=1e-8)
        self.assertFalse(result.degenerate)

    def test_fan4_closed_form(self) -> None:
        result = spectral_radius(fan(4))
        self.assertAlmostEqual(result.lambda_, FAN4_LAMBDA, delta=1e-8)
        self.assertLessEqual(result.bracket_low, result.lambda_)
        self.assertLessEqual(result.lambda_, result.bracket_high)
        self.assertLess(result.bracket_high - result.bracket_low, 1e-10)
        self.assertLess(result.residual, 1e-8)
        self.assertAlmostEqual(brute_force_lambda(fan(4)), result.lambda_, delta=1e-6)

    def test_fan4_vector_satisfies_eigenequation(self) -> None:
        result = spectral_radius(fan(4))
        x = np.array(result.vector)
        self.assertAlmostEqual(float(np.sum(x**3)), 1.0, delta=1e-12)
        self.assertLess(eigen_residual(fan(4), result.lambda_, x), 1e-8)
        self.assertAlmostEqual(rayleigh(fan(4), x), result.lambda_, delta=1e-9)
        self.assertAlmostEqual(x[0] / x[1], 2.0 ** (1.0 / 3.0), delta=1e-7)

    def test_max_entry_normalization(self) -> None:
        result = spectral_radius(fan(6), SolverConfig(normalization=Normalization.MAX_ENTRY_ONE))
        self.assertAlmostEqual(max(result.vector), 1.0)
        self.assertEqual(result.normalization, Normalization.MAX_ENTRY_ONE)
        self.assertLess(result.residual, 1e-7)

    def test_edgeless(self) -> None:
        result = spectral_radius(UniformHypergraph(n=3))
        self.assertTrue(result.degenerate)
        self.assertEqual(result.lambda_, 0.0)
        self.assertEqual(result.vector, (0.0, 0.0, 0.0))

    def test_disconnected(self) -> None:
        H = UniformHypergraph.from_edges(8, [[0, 1, 2], [3, 4, 5], [3, 5, 6]])
        result = spectral_radius(H)
        self.assertAlmostEqual(result.lambda_, FAN4_LAMBDA, delta=1e-8)
        self.assertEqual(result.component, (3, 4, 5, 6))
        self.assertEqual(result.vector[0], 0.0)
        self.assertEqual(result.vector[7], 0.0)

    def test_graphs(self) -> None:
        # r = 2 reduces to the adjacency matrix
        cycle = UniformHypergraph.from_edges(5, [[i, (i + 1) % 5] for i in range(5)], r=2)
        self.assertAlmostEqual(spectral_radius(cycle).lambda_, 2.0, delta=1e-9)
        path = UniformHypergraph.from_edges(3, [[0, 1], [1, 2]], r=2)
        self.assertAlmostEqual(spectral_radius(path).lambda_, 2.0**0.5, delta=1e-9)

    def test_convergence_error(self) -> None:
        with self.assertRaises(exceptions.ConvergenceError) as ctx:
            spectral_radius(fan(8), SolverConfig(max_iter=1, tol=1e-15))
        low, high = ctx.exception.bracket
        self.assertLessEqual(low, high)
        self.assertEqual(ctx.exception.iterations, 1)

    def test_deterministic(self) -> None:
        H = to_hypergraph(random_triangulation(9, np.random.default_rng(4)))
        self.assertEqual(spectral_radius(H), spectral_radius(H))

    def test_seed_independence(self) -> None:
        H = to_hypergraph(random_triangulation(9, np.random.default_rng(8)))
        results = [spectral_radius(H, SolverConfig(seed=seed)) for seed in range(5)]
        for result in results[1:]:
            self.assertAlmostEqual(result.lambda_, results[0].lambda_, delta=1e-9)
            np.testing.assert_allclose(result.vector, results[0].vector, atol=1e-7)

    def test_shift_independence(self) -> None:
        H = to_hypergraph(random_triangulation(8, np.random.default_rng(12)))
        base = spectral_radius(H).lambda_
        for shift in (0.5, 2.0):
            self.assertAlmostEqual(spectral_radius(H, SolverConfig(shift=shift)).lambda_, base, delta=1e-9)

    def test_collatz_wielandt_bracket(self) -> None:
        rng = np.random.default_rng(6)
        for _ in range(20):
            H = to_hypergraph(random_triangulation(int(rng.integers(4, 10)), rng))
            value = spectral_radius(H).lambda_
            low, high = collatz_wielandt(H, rng.random(H.n) + 0.01)
            self.assertLessEqual(low, value + 1e-9)
            self.assertGreaterEqual(high, value - 1e-9)

    def test_monotone_under_added_edge(self) -> None:
        rng = np.random.default_rng(10)
        for _ in range(50):
            H = to_hypergraph(random_triangulation(int(rng.integers(5, 10)), rng))
            missing = [e for e in combinations(range(H.n), 3) if not H.has_edge(e)]
            extra = missing[int(rng.integers(len(missing)))]
            bigger = UniformHypergraph.from_edges(H.n, [*H.edges, extra])
            self.assertGreater(spectral_radius(bigger).lambda_ - spectral_radius(H).lambda_, 1e-8)

    def test_brute_force_agrees(self) -> None:
        rng = np.random.default_rng(14)
        for _ in range(5):
            H = to_hypergraph(random_triangulation(int(rng.integers(5, 8)), rng))
            value = spectral_radius(H).lambda_
            oracle = brute_force_lambda(H)
            self.assertLessEqual(oracle, value + 1e-9)
            self.assertAlmostEqual(oracle, value, delta=1e-6)


class TestPerronResult(unittest.TestCase):
    def test_bracket_invariant(self) -> None:
        with self.assertRaises(ValueError):
            PerronResult(
                lambda_=2.0,
                vector=(1.0,),
                bracket_low=0.0,
                bracket_high=1.0,
                residual=0.0,
                iterations=1,
            )

    def test_alias(self) -> None:
        result = spectral_radius(fan(4))
        dumped = result.model_dump(mode="json", by_alias=True)
        self.assertIn("lambda", dumped)
        self.assertEqual(PerronResult.model_validate(dumped), result)


if __name__ == "__main__":
    unittest.main()
