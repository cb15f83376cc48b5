"""Hyperfan models.

Pydantic models for every value that crosses a module boundary: hypergraphs
and their shadows, polygon triangulations, solver settings and results, scan
rows and command lines. All models are frozen and validate their invariants on
construction.
"""

from .cli import CliInvocation, Subcommand
from .hypergraph import DistanceMap, Edge, Pair, ShadowGraph, SubgraphView, UniformHypergraph
from .outerplanar import DualTree, EmbeddingFailure, EmbeddingReport, Triangulation
from .spectral import Normalization, PerronResult, SolverConfig
from .verify import BoundReport, ScanRecord, ScanSummary

__all__ = [
    "BoundReport",
    "CliInvocation",
    "DistanceMap",
    "DualTree",
    "Edge",
    "EmbeddingFailure",
    "EmbeddingReport",
    "Normalization",
    "Pair",
    "PerronResult",
    "ScanRecord",
    "ScanSummary",
    "ShadowGraph",
    "SolverConfig",
    "Subcommand",
    "SubgraphView",
    "Triangulation",
    "UniformHypergraph",
]
