"""Hyperfan.

Spectral radii of uniform hypergraphs through their adjacency tensors, with a
desk-scale harness for the claim that the fan hypergraph F_n has the largest
spectral radius among outerplanar 3-uniform hypergraphs on n vertices.

Modules:
    - `hypercore`: shadow graphs, links, BFS levels and far-side subgraphs.
    - `outerplanar`: fans, polygon triangulations, recognition and canonical forms.
    - `spectral`: the tensor operator and the shifted power iteration.
    - `verify`: bound checks, the exhaustive scan and the hyperedge moves.

Configurations:
    - `cache_config`: Global cache used by `SolverPool` for repeated solves.

Example:
.. code-block:: python

    from hyperfan import fan, spectral_radius

    result = spectral_radius(fan(4))
    print(result.lambda_)  # 2 ** (2 / 3)

"""

from .config import cache_config
from .hypercore import co_link, distances, edge_level, link, phi, shadow
from .models import PerronResult, SolverConfig, Triangulation, UniformHypergraph
from .outerplanar import (
    canonical_form,
    dual_tree,
    enumerate_triangulations,
    fan,
    is_outerplanar_hypergraph,
    to_hypergraph,
)
from .solver_pool import SolverPool
from .spectral import apply_adjacency, brute_force_lambda, eigen_residual, poly_eval, rayleigh, spectral_radius

__all__ = [
    "PerronResult",
    "SolverConfig",
    "SolverPool",
    "Triangulation",
    "UniformHypergraph",
    "apply_adjacency",
    "brute_force_lambda",
    "cache_config",
    "canonical_form",
    "co_link",
    "distances",
    "dual_tree",
    "edge_level",
    "eigen_residual",
    "enumerate_triangulations",
    "fan",
    "is_outerplanar_hypergraph",
    "link",
    "phi",
    "poly_eval",
    "rayleigh",
    "shadow",
    "spectral_radius",
    "to_hypergraph",
]
