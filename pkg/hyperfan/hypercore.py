"""Hypergraph and shadow-graph accessors.

The shadow of a hypergraph joins two vertices whenever some hyperedge holds
both of them. Links, co-links, levels and far-side subgraphs are read off the
hypergraph or its shadow. They work on any input, connected or not:
unreachable vertices carry a ``None`` distance instead of raising.

.. code-block:: python

    from hyperfan.hypercore import link, shadow
    from hyperfan.outerplanar import fan

    H = fan(5)
    G = shadow(H)
    link(H, 0)  # {(1, 2), (2, 3), (3, 4)}

"""

from __future__ import annotations
import logging
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

import networkx as nx

from .exceptions import InvalidQueryError, NotTwoConnectedError, UnreachableVertexError
from .models.hypergraph import (
    DistanceMap,
    Edge,
    Pair,
    ShadowGraph,
    SubgraphView,
    UniformHypergraph,
    pair,
)

if TYPE_CHECKING:
    from .models.outerplanar import Triangulation

logger = logging.getLogger("hyperfan")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        msg = f"vertex {v} outside [0, {n})"
        raise InvalidQueryError(msg, {"vertex": v, "n": n})


def shadow(H: UniformHypergraph) -> ShadowGraph:
    """Shadow graph: uv is an edge iff some hyperedge contains both u and v.

    Args:
        H (UniformHypergraph): The hypergraph.

    Returns:
        ShadowGraph: The shadow on the same vertex set.

    """
    pairs = (
        (edge[i], edge[j])
        for edge in H.edges
        for i in range(len(edge))
        for j in range(i + 1, len(edge))
    )
    return ShadowGraph.from_pairs(H.n, pairs)


def link(H: UniformHypergraph, v: int) -> set[Edge]:
    """Link of ``v``: the hyperedges through ``v`` with ``v`` removed.

    Args:
        H (UniformHypergraph): The hypergraph.
        v (int): The vertex.

    Returns:
        set[Edge]: Ascending (r-1)-tuples, one per hyperedge containing ``v``.

    """
    _check_vertex(H.n, v)
    return {tuple(u for u in edge if u != v) for edge in H.edges if v in edge}


def co_link(H: UniformHypergraph, e: Pair) -> set[int]:
    """Vertices completing the shadow edge ``e`` to a hyperedge.

    Args:
        H (UniformHypergraph): The hypergraph.
        e (Pair): A shadow edge.

    Returns:
        set[int]: The vertices ``w`` with ``e + {w}`` a hyperedge. For uniformity
        above 3 these are the vertices of every hyperedge through ``e``.

    Raises:
        InvalidQueryError: If ``e`` is not an edge of the shadow.

    """
    u, w = pair(*e)
    found: set[int] = set()
    for edge in H.edges:
        if u in edge and w in edge:
            found.update(x for x in edge if x not in (u, w))
    if not found:
        msg = f"{u}-{w} is not an edge of the shadow"
        raise InvalidQueryError(msg, {"edge": [u, w]})
    return found


def star(G: ShadowGraph, v: int) -> set[Pair]:
    """Edges incident with ``v`` (st(v))."""
    _check_vertex(G.n, v)
    return {pair(v, u) for u in G.neighbors(v)}


def closed_neighborhood(G: ShadowGraph, v: int) -> set[int]:
    """N[v]."""
    _check_vertex(G.n, v)
    return set(G.closed_neighborhood(v))


def distances(G: ShadowGraph, v: int) -> DistanceMap:
    """Exact hop distances from ``v``; vertices in other components map to ``None``.

    Args:
        G (ShadowGraph): The graph.
        v (int): Source vertex.

    Returns:
        DistanceMap: Distances per vertex.

    """
    _check_vertex(G.n, v)
    lengths: dict[int, int] = nx.single_source_shortest_path_length(G.to_networkx(), v)  # type: ignore[assignment]
    return DistanceMap(source=v, dist=tuple(lengths.get(u) for u in range(G.n)))


def edge_level(G: ShadowGraph, e: Pair, v: int) -> Fraction:
    """Level of ``e = uw`` relative to ``v``: (dist(u,v) + dist(w,v)) / 2.

    Args:
        G (ShadowGraph): The graph.
        e (Pair): An edge of ``G``.
        v (int): Reference vertex.

    Returns:
        Fraction: The exact half-integer level.

    Raises:
        InvalidQueryError: If ``e`` is not an edge of ``G``.
        UnreachableVertexError: If an endpoint of ``e`` is not reachable from ``v``.

    """
    u, w = pair(*e)
    if not G.has_edge(u, w):
        msg = f"{u}-{w} is not an edge"
        raise InvalidQueryError(msg, {"edge": [u, w]})
    dist = distances(G, v).dist
    du, dw = dist[u], dist[w]
    if du is None or dw is None:
        msg = f"edge {u}-{w} is not reachable from {v}"
        raise UnreachableVertexError(msg, {"edge": [u, w], "vertex": v})
    return Fraction(du + dw, 2)


def is_outer_edge(
    G: ShadowGraph,
    e: Pair,
    triangulation: Optional[Triangulation] = None,
) -> bool:
    """Whether ``e`` lies on the outer cycle.

    With a triangulation the answer is read off the polygon sides. Without
    one, an edge of a 2-connected outerplanar graph is outer iff removing both
    endpoints leaves the graph connected.
    """
    u, w = pair(*e)
    if triangulation is not None:
        return triangulation.is_side(u, w)
    rest = G.to_networkx()
    rest.remove_nodes_from((u, w))
    return rest.number_of_nodes() == 0 or nx.is_connected(rest)


def phi(
    G: ShadowGraph,
    e: Pair,
    v: int,
    triangulation: Optional[Triangulation] = None,
) -> SubgraphView:
    """Far side of the edge ``e = uw`` as seen from ``v``.

    Args:
        G (ShadowGraph): A 2-connected graph.
        e (Pair): An edge of ``G``.
        v (int): A vertex outside ``e``.
        triangulation (Optional[Triangulation]): Polygon embedding of ``G``, used
            to classify outer edges. Defaults to None.

    Returns:
        SubgraphView: Empty when ``e`` is an outer edge, otherwise the components
        of ``G - {u, w}`` not containing ``v`` with their edges to ``u`` and ``w``.

    Raises:
        InvalidQueryError: If ``v`` lies on ``e`` or ``e`` is not an edge.
        NotTwoConnectedError: If ``G`` is not 2-connected.

    """
    u, w = pair(*e)
    _check_vertex(G.n, v)
    if v in (u, w):
        msg = f"vertex {v} is incident to {u}-{w}"
        raise InvalidQueryError(msg, {"edge": [u, w], "vertex": v})
    if not G.has_edge(u, w):
        msg = f"{u}-{w} is not an edge"
        raise InvalidQueryError(msg, {"edge": [u, w]})
    graph = G.to_networkx()
    if not nx.is_biconnected(graph):
        msg = "graph is not 2-connected"
        raise NotTwoConnectedError(msg, {"n": G.n})

    if is_outer_edge(G, (u, w), triangulation):
        logger.debug(f"Edge {u}-{w} is outer; far side of {v} is empty")
        return SubgraphView(anchors=(u, w))

    graph.remove_nodes_from((u, w))
    far: set[int] = set()
    for component in nx.connected_components(graph):
        if v not in component:
            far.update(component)
    edges = sorted(pair(a, b) for a, b in G.edges() if (a in far or b in far))
    return SubgraphView(vertices=tuple(sorted(far)), edges=tuple(edges), anchors=(u, w))
