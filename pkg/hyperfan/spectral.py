"""Adjacency-tensor operator and spectral radius of uniform hypergraphs.

The adjacency tensor is never materialized. Applying it to ``x^{r-1}`` costs
one pass over the edge array:

    (A x^{r-1})_i = sum over edges e containing i of prod_{j in e, j != i} x_j

The spectral radius is the largest value of ``P_H(x) / ||x||_r^r`` over
non-negative ``x``, where ``P_H(x) = r * sum_e prod_{j in e} x_j``. On a
connected hypergraph it is the unique eigenvalue with a positive eigenvector.
:func:`spectral_radius` finds it with a shifted power iteration. Each
iterate yields a Collatz-Wielandt bracket, a lower and an upper bound on the
radius. The iteration stops once the bracket is narrower than ``tol``.
"""

from __future__ import annotations
import logging
from typing import Optional

import networkx as nx
import numpy as np
import numpy.typing as npt

from .exceptions import ConvergenceError, DimensionMismatchError, InvalidVectorError
from .hypercore import shadow
from .models.hypergraph import UniformHypergraph
from .models.spectral import Normalization, PerronResult, SolverConfig

logger = logging.getLogger("hyperfan")

FloatArray = npt.NDArray[np.float64]

START_NOISE = 1e-3


def _edge_array(H: UniformHypergraph) -> npt.NDArray[np.intp]:
    return np.asarray(H.edges, dtype=np.intp).reshape(len(H.edges), H.r)


def _as_vector(H: UniformHypergraph, x: npt.ArrayLike) -> FloatArray:
    vector = np.asarray(x, dtype=np.float64).reshape(-1)
    if vector.shape[0] != H.n:
        msg = f"vector has length {vector.shape[0]}, expected {H.n}"
        raise DimensionMismatchError(msg, {"length": int(vector.shape[0]), "n": H.n})
    return vector


def _apply(edges: npt.NDArray[np.intp], x: FloatArray, n: int) -> FloatArray:
    out = np.zeros(n, dtype=np.float64)
    if edges.shape[0] == 0:
        return out
    values = x[edges]
    r = edges.shape[1]
    for j in range(r):
        others = np.prod(np.delete(values, j, axis=1), axis=1)
        out += np.bincount(edges[:, j], weights=others, minlength=n)
    return out


def apply_adjacency(H: UniformHypergraph, x: npt.ArrayLike) -> FloatArray:
    """Compute ``A x^{r-1}``.

    Args:
        H (UniformHypergraph): The hypergraph.
        x (npt.ArrayLike): One real per vertex.

    Returns:
        FloatArray: Entry ``i`` is the sum over hyperedges through ``i`` of the
        product of their other entries.

    Raises:
        DimensionMismatchError: If ``len(x) != H.n``.

    """
    return _apply(_edge_array(H), _as_vector(H, x), H.n)


def poly_eval(H: UniformHypergraph, x: npt.ArrayLike) -> float:
    """Compute ``P_H(x) = r * sum_e prod_{j in e} x_j``.

    Raises:
        DimensionMismatchError: If ``len(x) != H.n``.

    """
    vector = _as_vector(H, x)
    if not H.edges:
        return 0.0
    return float(H.r * np.sum(np.prod(vector[_edge_array(H)], axis=1)))


def rayleigh(H: UniformHypergraph, x: npt.ArrayLike) -> float:
    """Quotient ``P_H(x) / ||x||_r^r``, a lower bound on the spectral radius.

    Raises:
        DimensionMismatchError: If ``len(x) != H.n``.
        InvalidVectorError: If ``x`` has a negative entry or is zero.

    """
    vector = _as_vector(H, x)
    if np.any(vector < 0):
        msg = "vector has a negative entry"
        raise InvalidVectorError(msg, {"min": float(vector.min())})
    denominator = float(np.sum(vector**H.r))
    if denominator == 0.0:
        msg = "vector is zero"
        raise InvalidVectorError(msg)
    return poly_eval(H, vector) / denominator


def collatz_wielandt(H: UniformHypergraph, x: npt.ArrayLike) -> tuple[float, float]:
    """Min and max of ``(A x^{r-1})_i / x_i^{r-1}`` over a positive ``x``.

    On a connected hypergraph the spectral radius lies between the two.

    Raises:
        InvalidVectorError: If some entry of ``x`` is not positive.

    """
    vector = _as_vector(H, x)
    if np.any(vector <= 0):
        msg = "Collatz-Wielandt ratios need a positive vector"
        raise InvalidVectorError(msg, {"min": float(vector.min())})
    ratios = apply_adjacency(H, vector) / vector ** (H.r - 1)
    return float(ratios.min()), float(ratios.max())


def normalize(x: npt.ArrayLike, r: int, normalization: Normalization) -> FloatArray:
    """Scale ``x`` to unit r-norm or to maximum entry one.

    Raises:
        InvalidVectorError: If ``x`` is zero.

    """
    vector = np.asarray(x, dtype=np.float64)
    if normalization is Normalization.MAX_ENTRY_ONE:
        scale = float(np.max(np.abs(vector))) if vector.size else 0.0
    else:
        scale = float(np.sum(np.abs(vector) ** r) ** (1.0 / r))
    if scale == 0.0:
        msg = "cannot normalize a zero vector"
        raise InvalidVectorError(msg)
    return vector / scale


def eigen_residual(H: UniformHypergraph, lambda_: float, x: npt.ArrayLike) -> float:
    """Largest eigenequation defect ``|lambda x_i^{r-1} - (A x^{r-1})_i|`` over ``x_i > 0``.

    Raises:
        DimensionMismatchError: If ``len(x) != H.n``.

    """
    vector = _as_vector(H, x)
    support = vector > 0
    if not np.any(support):
        return 0.0
    defect = lambda_ * vector ** (H.r - 1) - apply_adjacency(H, vector)
    return float(np.max(np.abs(defect[support])))


def _components(H: UniformHypergraph) -> list[list[int]]:
    graph = shadow(H).to_networkx()
    found = [sorted(c) for c in nx.connected_components(graph) if len(c) > 1]
    return sorted(found)


def _solve_component(
    H: UniformHypergraph,
    vertices: list[int],
    cfg: SolverConfig,
    rng: np.random.Generator,
) -> tuple[float, float, float, FloatArray, int]:
    """Shifted power iteration on one connected component.

    Returns lambda, the bracket, the unit r-norm vector and the iteration count.
    """
    r = H.r
    local = {v: i for i, v in enumerate(vertices)}
    edges = np.asarray(
        [[local[v] for v in edge] for edge in H.edges if edge[0] in local],
        dtype=np.intp,
    ).reshape(-1, r)
    m = len(vertices)

    x = 1.0 + START_NOISE * rng.random(m)
    x /= np.sum(x**r) ** (1.0 / r)
    low = high = 0.0
    for iteration in range(1, cfg.max_iter + 1):
        powered = x ** (r - 1)
        y = _apply(edges, x, m) + cfg.shift * powered
        ratios = y / powered
        low, high = float(ratios.min()), float(ratios.max())
        if high - low < cfg.tol:
            ax = y - cfg.shift * powered
            value = float(np.dot(x, ax) / np.sum(x**r))
            value = min(max(value, low - cfg.shift), high - cfg.shift)
            logger.debug(
                f"Component of size {m} converged after {iteration} iterations: "
                f"lambda={value!r}, bracket width {high - low:.3e}",
            )
            return value, low - cfg.shift, high - cfg.shift, x, iteration
        x = y ** (1.0 / (r - 1))
        x /= np.sum(x**r) ** (1.0 / r)

    msg = f"power iteration did not converge within {cfg.max_iter} iterations"
    raise ConvergenceError(
        msg,
        {
            "bracket_low": low - cfg.shift,
            "bracket_high": high - cfg.shift,
            "iterations": cfg.max_iter,
        },
    )


def spectral_radius(H: UniformHypergraph, cfg: Optional[SolverConfig] = None) -> PerronResult:
    """Spectral radius of ``H`` with its Perron vector and certificate.

    Each connected component of the shadow is solved on its own. The largest
    component value is reported, and the vector is zero off that component.
    A hypergraph without edges gives lambda 0 with the ``degenerate`` flag.

    Args:
        H (UniformHypergraph): The hypergraph.
        cfg (Optional[SolverConfig]): Solver settings. Defaults to ``SolverConfig()``.

    Returns:
        PerronResult: lambda, vector, bracket, residual and iteration count.

    Raises:
        ConvergenceError: If a component exhausts ``cfg.max_iter``; the details
            carry the bracket reached.

    """
    cfg = cfg or SolverConfig()
    if not H.edges:
        logger.debug("Hypergraph has no edges; reporting the degenerate result")
        return PerronResult(
            lambda_=0.0,
            vector=(0.0,) * H.n,
            bracket_low=0.0,
            bracket_high=0.0,
            residual=0.0,
            iterations=0,
            normalization=cfg.normalization,
            degenerate=True,
        )

    rng = np.random.default_rng(cfg.seed)
    best: Optional[tuple[float, float, float, FloatArray, int, list[int]]] = None
    for vertices in _components(H):
        value, low, high, x, iterations = _solve_component(H, vertices, cfg, rng)
        if best is None or value > best[0]:
            best = (value, low, high, x, iterations, vertices)
    assert best is not None  # noqa: S101
    value, low, high, x, iterations, vertices = best

    full = np.zeros(H.n, dtype=np.float64)
    full[vertices] = x
    full = normalize(full, H.r, cfg.normalization)
    residual = eigen_residual(H, value, full)
    return PerronResult(
        lambda_=value,
        vector=tuple(float(v) for v in full),
        bracket_low=low,
        bracket_high=high,
        residual=residual,
        iterations=iterations,
        normalization=cfg.normalization,
        component=tuple(vertices),
    )


def brute_force_lambda(
    H: UniformHypergraph,
    restarts: int = 8,
    steps: int = 2000,
    seed: int = 0,
) -> float:
    """Maximize ``P_H(x) / ||x||_r^r`` by projected gradient ascent.

    Independent of the power iteration. Each restart starts from a random
    positive point of the unit r-sphere and takes up to ``steps`` gradient
    steps. Each step clips at zero, renormalizes, and is accepted only if it
    improves the quotient. The step grows after a success and halves after a
    failure. Intended for small ``n``.

    Args:
        H (UniformHypergraph): The hypergraph.
        restarts (int): Number of random starts. Defaults to 8.
        steps (int): Gradient steps per start. Defaults to 2000.
        seed (int): Seed for the starts. Defaults to 0.

    Returns:
        float: The best quotient found.

    """
    if not H.edges:
        return 0.0
    r = H.r
    edges = _edge_array(H)
    rng = np.random.default_rng(seed)

    def quotient(x: FloatArray) -> float:
        return float(r * np.sum(np.prod(x[edges], axis=1)))

    best = 0.0
    for _ in range(max(restarts, 1)):
        x = rng.random(H.n) + 0.05
        x /= np.sum(x**r) ** (1.0 / r)
        value = quotient(x)
        eta = 0.1
        for _ in range(steps):
            gradient = r * (_apply(edges, x, H.n) - value * x ** (r - 1))
            if float(np.max(np.abs(gradient))) < 1e-13:  # noqa: PLR2004
                break
            candidate = np.maximum(x + eta * gradient, 0.0)
            norm = float(np.sum(candidate**r) ** (1.0 / r))
            if norm == 0.0:
                eta *= 0.5
                continue
            candidate /= norm
            candidate_value = quotient(candidate)
            if candidate_value > value:
                x, value = candidate, candidate_value
                eta *= 1.2
            else:
                eta *= 0.5
                if eta < 1e-16:  # noqa: PLR2004
                    break
        best = max(best, value)
    logger.debug(f"Gradient ascent best quotient {best!r} over {restarts} starts")
    return best
