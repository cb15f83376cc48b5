"""Construction, recognition and enumeration of outerplanar 3-uniform hypergraphs.

Every maximal outerplanar 3-uniform hypergraph is, up to relabeling, the set
of triangles of a triangulation of the convex polygon ``0..n-1``. The polygon
is the outer Hamilton cycle of the shadow. Enumeration therefore runs over
triangulations of the fixed polygon, Catalan(n - 2) of them, with optional
reduction modulo the dihedral group.
"""

from __future__ import annotations
import logging
from collections.abc import Iterator
from math import comb
from typing import TYPE_CHECKING

import networkx as nx

from .exceptions import InvalidHypergraphError, InvalidParameterError, UniformityError
from .hypercore import shadow
from .models.hypergraph import Pair, UniformHypergraph, pair
from .models.outerplanar import (
    DualTree,
    EmbeddingFailure,
    EmbeddingReport,
    Triangle,
    Triangulation,
)

if TYPE_CHECKING:
    import numpy as np

logger = logging.getLogger("hyperfan")

DiagonalSet = tuple[Pair, ...]


def catalan(k: int) -> int:
    """The k-th Catalan number."""
    if k < 0:
        msg = f"catalan index must be non-negative, got {k}"
        raise InvalidParameterError(msg, {"k": k})
    return comb(2 * k, k) // (k + 1)


def fan(n: int) -> UniformHypergraph:
    """Fan hypergraph F_n: hub 0 and hyperedges {0, i, i+1} for i = 1..n-2.

    Args:
        n (int): Vertex count, at least 3.

    Returns:
        UniformHypergraph: F_n, whose shadow is K_1 + P_{n-1}.

    Raises:
        InvalidParameterError: If ``n < 3``.

    """
    if n < 3:  # noqa: PLR2004
        msg = f"fan needs n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    return UniformHypergraph(n=n, r=3, edges=tuple((0, i, i + 1) for i in range(1, n - 1)))


def fan_triangulation(n: int) -> Triangulation:
    """Triangulation of the n-gon by all diagonals from vertex 0."""
    if n < 3:  # noqa: PLR2004
        msg = f"fan needs n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    return Triangulation(n=n, diagonals=tuple((0, k) for k in range(2, n - 1)))


def _fill(i: int, j: int) -> Iterator[DiagonalSet]:
    """Lazily yield every diagonal set triangulating the sub-polygon i..j over the chord i-j."""
    if j - i < 2:  # noqa: PLR2004
        yield ()
        return
    for k in range(i + 1, j):
        own: DiagonalSet = tuple(d for d in ((i, k), (k, j)) if d[1] - d[0] >= 2)  # noqa: PLR2004
        for left in _fill(i, k):
            for right in _fill(k, j):
                yield own + left + right


def enumerate_triangulations(n: int, dedupe: bool = False) -> Iterator[Triangulation]:
    """Stream every triangulation of the convex n-gon in a fixed order.

    The root triangle over the chord 0-(n-1) is chosen first, then both sides
    are filled recursively.

    Args:
        n (int): Polygon size, at least 3.
        dedupe (bool): Yield only the canonical form of each dihedral class,
            in first-seen order. Defaults to False.

    Yields:
        Triangulation: Catalan(n - 2) triangulations, or one per class with ``dedupe``.

    Raises:
        InvalidParameterError: If ``n < 3``.

    """
    if n < 3:  # noqa: PLR2004
        msg = f"triangulations need n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    seen: set[DiagonalSet] = set()
    for diagonals in _fill(0, n - 1):
        triangulation = Triangulation(n=n, diagonals=tuple(sorted(diagonals)))
        if not dedupe:
            yield triangulation
            continue
        canonical = canonical_form(triangulation)
        if canonical.diagonals in seen:
            continue
        seen.add(canonical.diagonals)
        yield canonical


def random_triangulation(n: int, rng: np.random.Generator) -> Triangulation:
    """Random triangulation built by picking each root apex uniformly.

    Args:
        n (int): Polygon size, at least 3.
        rng (np.random.Generator): Source of randomness.

    Returns:
        Triangulation: The sampled triangulation.

    """
    if n < 3:  # noqa: PLR2004
        msg = f"triangulations need n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    diagonals: list[Pair] = []
    stack = [(0, n - 1)]
    while stack:
        i, j = stack.pop()
        if j - i < 2:  # noqa: PLR2004
            continue
        k = int(rng.integers(i + 1, j))
        diagonals.extend(d for d in ((i, k), (k, j)) if d[1] - d[0] >= 2)  # noqa: PLR2004
        stack.extend(((i, k), (k, j)))
    return Triangulation(n=n, diagonals=tuple(sorted(diagonals)))


def to_hypergraph(T: Triangulation) -> UniformHypergraph:
    """3-uniform hypergraph whose hyperedges are the n - 2 triangles of ``T``."""
    return UniformHypergraph(n=T.n, r=3, edges=tuple(T.triangles()))


def dual_tree(T: Triangulation) -> DualTree:
    """Tree on the triangles of ``T``, linking triangles that share a diagonal."""
    nodes = tuple(T.triangles())
    owners: dict[Pair, list[int]] = {}
    for index, (a, b, c) in enumerate(nodes):
        for side in ((a, b), (a, c), (b, c)):
            owners.setdefault(side, []).append(index)
    links = tuple(sorted((found[0], found[1]) for found in owners.values() if len(found) == 2))  # noqa: PLR2004
    return DualTree(nodes=nodes, links=links)


def _dihedral_images(T: Triangulation) -> Iterator[DiagonalSet]:
    n = T.n
    for s in range(n):
        yield tuple(sorted(pair((a + s) % n, (b + s) % n) for a, b in T.diagonals))
        yield tuple(sorted(pair((s - a) % n, (s - b) % n) for a, b in T.diagonals))


def canonical_form(T: Triangulation) -> Triangulation:
    """Lexicographically smallest image of ``T`` under the 2n polygon symmetries."""
    return Triangulation(n=T.n, diagonals=min(_dihedral_images(T)))


def is_fan(T: Triangulation) -> bool:
    """Whether ``T`` is a fan, i.e. some vertex sees every other vertex."""
    return canonical_form(T).diagonals == fan_triangulation(T.n).diagonals


def _normalize_cycle(order: list[int]) -> tuple[int, ...]:
    if not order:
        return ()
    start = order.index(min(order))
    cycle = order[start:] + order[:start]
    if len(cycle) > 2 and cycle[1] > cycle[-1]:  # noqa: PLR2004
        cycle = [cycle[0], *reversed(cycle[1:])]
    return tuple(cycle)


def is_outerplanar_hypergraph(H: UniformHypergraph) -> EmbeddingReport:
    """Test whether ``H`` embeds with every hyperedge an interior triangular face.

    The shadow is outerplanar iff it stays planar after adding one apex vertex
    joined to every vertex. The faces of that planar embedding that avoid the
    apex are the interior faces of an outerplanar embedding of the shadow.

    Args:
        H (UniformHypergraph): A 3-uniform hypergraph.

    Returns:
        EmbeddingReport: The verdict, the outer vertex order when it passes,
        and the cause when it fails.

    Raises:
        UniformityError: If ``H.r != 3``.

    """
    if H.r != 3:  # noqa: PLR2004
        msg = f"outerplanarity is defined for r = 3, got r = {H.r}"
        raise UniformityError(msg, {"r": H.r})
    graph = shadow(H).to_networkx()
    apex = H.n
    graph.add_edges_from((apex, v) for v in range(H.n))
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        logger.debug("Shadow plus apex is not planar")
        return EmbeddingReport(ok=False, failure_reason=EmbeddingFailure.SHADOW_NOT_OUTERPLANAR)

    faces: set[frozenset[int]] = set()
    visited: set[tuple[int, int]] = set()
    for u, w in embedding.edges():
        if (u, w) in visited:
            continue
        face: list[int] = embedding.traverse_face(u, w, mark_half_edges=visited)
        if apex not in face and len(face) == 3:  # noqa: PLR2004
            faces.add(frozenset(face))
    for edge in H.edges:
        if frozenset(edge) not in faces:
            logger.debug(f"Hyperedge {list(edge)} is not an interior triangular face")
            return EmbeddingReport(ok=False, failure_reason=EmbeddingFailure.HYPEREDGE_NOT_FACE)

    order: list[int] = list(embedding.neighbors_cw_order(apex))
    return EmbeddingReport(ok=True, outer_cycle=_normalize_cycle(order))


def is_maximal_outerplanar(H: UniformHypergraph) -> bool:
    """Whether ``H`` is the triangle set of a triangulated n-gon (n >= 3)."""
    if H.r != 3 or H.n < 3 or H.edge_count != H.n - 2:  # noqa: PLR2004
        return False
    if shadow(H).edge_count != 2 * H.n - 3:
        return False
    return is_outerplanar_hypergraph(H).ok


def polygon_embedding(H: UniformHypergraph) -> tuple[Triangulation, tuple[int, ...]]:
    """Place a maximal outerplanar ``H`` on polygon positions along its outer cycle.

    Args:
        H (UniformHypergraph): A maximal outerplanar 3-uniform hypergraph.

    Returns:
        tuple[Triangulation, tuple[int, ...]]: The triangulation on positions
        ``0..n-1`` and the outer cycle, where position ``i`` holds vertex ``cycle[i]``.

    Raises:
        InvalidHypergraphError: If ``H`` is not maximal outerplanar.

    """
    report = is_outerplanar_hypergraph(H)
    if not is_maximal_outerplanar(H) or report.outer_cycle is None:
        msg = "hypergraph is not maximal outerplanar"
        raise InvalidHypergraphError(msg, {"n": H.n, "edges": H.edge_count})
    cycle = report.outer_cycle
    return triangulation_on_cycle(H, cycle), cycle


def triangulation_on_cycle(H: UniformHypergraph, cycle: tuple[int, ...] | list[int]) -> Triangulation:
    """Read ``H`` as a triangulation of the polygon whose boundary is ``cycle``.

    Raises:
        InvalidHypergraphError: If the hyperedges are not the triangles of a
            triangulation with that boundary.

    """
    if sorted(cycle) != list(range(H.n)):
        msg = "cycle must visit every vertex once"
        raise InvalidHypergraphError(msg, {"cycle": list(cycle)})
    position = {v: i for i, v in enumerate(cycle)}
    chords = {
        pair(position[edge[i]], position[edge[j]])
        for edge in H.edges
        for i in range(3)
        for j in range(i + 1, 3)
    }
    diagonals = [
        (a, b) for a, b in chords if not (b - a == 1 or (a == 0 and b == H.n - 1))
    ]
    triangulation = Triangulation.from_diagonals(H.n, diagonals)
    placed: set[Triangle] = {
        tuple(sorted(position[v] for v in edge)) for edge in H.edges  # type: ignore[misc]
    }
    if placed != set(triangulation.triangles()):
        msg = "hyperedges are not the triangles of the polygon"
        raise InvalidHypergraphError(msg, {"cycle": list(cycle)})
    return triangulation
