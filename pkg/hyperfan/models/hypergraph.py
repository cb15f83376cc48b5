from __future__ import annotations
from collections.abc import Iterable
from functools import cached_property
from typing import Any, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from typing_extensions import Self

from hyperfan.exceptions import InvalidHypergraphError

Edge = tuple[int, ...]
Pair = tuple[int, int]


def pair(u: int, w: int) -> Pair:
    """Return the vertex pair ``{u, w}`` as an ascending tuple."""
    return (u, w) if u < w else (w, u)


def _all_int_lists(raw: Any) -> bool:
    if not isinstance(raw, (list, tuple)):
        return False
    return all(
        isinstance(edge, (list, tuple))
        and all(isinstance(v, int) and not isinstance(v, bool) for v in edge)  # type: ignore[union-attr]
        for edge in raw  # type: ignore[union-attr]
    )


class UniformHypergraph(BaseModel):
    """An r-uniform hypergraph on the dense vertex set ``0..n-1``.

    Edges are stored as ascending vertex tuples, and the edge tuple itself is
    sorted lexicographically, which makes the JSON form canonical.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count")
    r: int = Field(3, ge=2, description="Uniformity (edge size)")
    edges: tuple[Edge, ...] = Field(
        default=(),
        description="Sorted r-element vertex subsets, sorted lexicographically",
    )

    @model_validator(mode="before")
    @classmethod
    def _canonical_edges(cls, data: Any) -> Any:
        if isinstance(data, dict) and "edges" in data:
            raw = data["edges"]  # type: ignore[index]
            if _all_int_lists(raw):
                edges = sorted(tuple(sorted(edge)) for edge in raw)  # type: ignore[union-attr]
                data = {**data, "edges": tuple(edges)}  # type: ignore[dict-item]
        return data  # type: ignore[return-value]

    @model_validator(mode="after")
    def _check_structure(self) -> Self:
        if list(self.edges) != sorted(tuple(sorted(edge)) for edge in self.edges):
            msg = "edges must be integer vertex lists"
            raise ValueError(msg)
        seen: set[Edge] = set()
        for edge in self.edges:
            if len(edge) != self.r:
                msg = f"edge {list(edge)} has {len(edge)} vertices, expected r={self.r}"
                raise ValueError(msg)
            if len(set(edge)) != self.r:
                msg = f"edge {list(edge)} repeats a vertex"
                raise ValueError(msg)
            if edge[0] < 0 or edge[-1] >= self.n:
                msg = f"edge {list(edge)} has a vertex outside [0, {self.n})"
                raise ValueError(msg)
            if edge in seen:
                msg = f"duplicate edge {list(edge)}"
                raise ValueError(msg)
            seen.add(edge)
        return self

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Iterable[int]],
        r: int = 3,
    ) -> UniformHypergraph:
        """Build a hypergraph, reporting invariant violations as domain errors.

        Args:
            n (int): Vertex count.
            edges (Iterable[Iterable[int]]): Hyperedges in any order.
            r (int): Uniformity. Defaults to 3.

        Returns:
            UniformHypergraph: The validated hypergraph.

        Raises:
            InvalidHypergraphError: If a structural invariant is violated.

        """
        try:
            return cls(n=n, r=r, edges=[list(edge) for edge in edges])  # type: ignore[arg-type]
        except ValidationError as e:
            raise InvalidHypergraphError(
                "; ".join(str(err["msg"]) for err in e.errors()),
                {"n": n, "r": r},
            ) from e

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        """Hyperedges as a set, for membership tests."""
        return frozenset(self.edges)

    @property
    def edge_count(self) -> int:
        """Number of hyperedges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of hyperedges containing ``v`` (d_H(v))."""
        return sum(1 for edge in self.edges if v in edge)

    def has_edge(self, edge: Iterable[int]) -> bool:
        """Whether the given vertex set is a hyperedge."""
        return tuple(sorted(edge)) in self.edge_set

    def relabel(self, mapping: dict[int, int] | list[int]) -> UniformHypergraph:
        """Apply a vertex permutation ``v -> mapping[v]``."""
        return UniformHypergraph(
            n=self.n,
            r=self.r,
            edges=[[mapping[v] for v in edge] for edge in self.edges],  # type: ignore[arg-type]
        )


class ShadowGraph(BaseModel):
    """Simple graph on ``0..n-1`` stored as per-vertex sorted neighbor tuples."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count")
    adjacency: tuple[tuple[int, ...], ...] = Field(
        ...,
        description="Sorted neighbor tuple of every vertex",
    )

    @model_validator(mode="after")
    def _check_symmetric(self) -> Self:
        if len(self.adjacency) != self.n:
            msg = f"adjacency has {len(self.adjacency)} rows, expected {self.n}"
            raise ValueError(msg)
        for v, neighbors in enumerate(self.adjacency):
            if list(neighbors) != sorted(set(neighbors)):
                msg = f"neighbors of {v} are not sorted and unique"
                raise ValueError(msg)
            for u in neighbors:
                if u == v:
                    msg = f"loop at {v}"
                    raise ValueError(msg)
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    msg = f"adjacency is not symmetric at {v}-{u}"
                    raise ValueError(msg)
        return self

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> ShadowGraph:
        """Build a graph from an edge list, ignoring repeated pairs."""
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, w in pairs:
            neighbors[u].add(w)
            neighbors[w].add(u)
        return cls(n=n, adjacency=tuple(tuple(sorted(s)) for s in neighbors))

    def neighbors(self, v: int) -> tuple[int, ...]:
        """N(v)."""
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        """N[v]."""
        return tuple(sorted((*self.adjacency[v], v)))

    def degree(self, v: int) -> int:
        """d(v)."""
        return len(self.adjacency[v])

    def has_edge(self, u: int, w: int) -> bool:
        """Whether uw is an edge."""
        return 0 <= u < self.n and w in self.adjacency[u]

    def edges(self) -> list[Pair]:
        """All edges as ascending pairs, sorted."""
        return [(v, u) for v, neighbors in enumerate(self.adjacency) for u in neighbors if v < u]

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def to_networkx(self) -> nx.Graph:  # type: ignore[type-arg]
        """Convert to a ``networkx.Graph`` with nodes ``0..n-1``."""
        graph: nx.Graph = nx.Graph()  # type: ignore[type-arg]
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


class DistanceMap(BaseModel):
    """BFS hop distances from ``source``; ``None`` marks unreachable vertices."""

    model_config = ConfigDict(frozen=True)

    source: int = Field(..., ge=0, description="Source vertex")
    dist: tuple[Optional[int], ...] = Field(..., description="Hop distance per vertex")

    @model_validator(mode="after")
    def _check_source(self) -> Self:
        if self.source >= len(self.dist) or self.dist[self.source] != 0:
            msg = "dist(source) must be 0"
            raise ValueError(msg)
        return self

    def layer(self, k: int) -> tuple[int, ...]:
        """N_k(source): the vertices at distance exactly ``k``."""
        return tuple(v for v, d in enumerate(self.dist) if d == k)

    def reachable(self, v: int) -> bool:
        """Whether ``v`` lies in the component of the source."""
        return self.dist[v] is not None


class SubgraphView(BaseModel):
    """Vertex and edge subset of a host shadow graph, attached at two anchors."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(default=(), description="Vertices of the view")
    edges: tuple[Pair, ...] = Field(default=(), description="Edges of the view")
    anchors: Pair = Field(..., description="The edge uw the view hangs off")

    @model_validator(mode="after")
    def _check_endpoints(self) -> Self:
        allowed = set(self.vertices) | set(self.anchors)
        for u, w in self.edges:
            if u not in allowed or w not in allowed:
                msg = f"edge {u}-{w} leaves the view"
                raise ValueError(msg)
        return self

    @property
    def is_empty(self) -> bool:
        """Whether the view has no vertices."""
        return not self.vertices
