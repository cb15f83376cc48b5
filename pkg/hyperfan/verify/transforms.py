"""Hyperedge moves that increase the spectral radius of an outerplanar hypergraph.

Both moves act on a maximal outerplanar 3-uniform hypergraph placed on a
convex polygon:

* :func:`flip_transform` takes the part of the polygon beyond the diagonal
  ``v1 v2`` and reflects it across ``v0 v1``. The hub ``v0`` then takes over
  the role ``v2`` had there. When ``x[v0] > x[v2]`` at the Perron vector,
  the radius grows.
* :func:`leaf_reattach` cuts off an ear ``{w, s, t}`` whose tip ``w`` lies in
  no other hyperedge and glues ``w`` back onto the outer edge ``v0 v1``.

Both return a new hypergraph. Its outer cycle is checked by rebuilding the
polygon triangulation.
"""

from __future__ import annotations
import logging
from typing import TYPE_CHECKING

import numpy as np

from hyperfan.exceptions import PreconditionError
from hyperfan.hypercore import phi, shadow
from hyperfan.models.hypergraph import Edge, UniformHypergraph
from hyperfan.outerplanar import dual_tree, to_hypergraph, triangulation_on_cycle
from hyperfan.spectral import poly_eval

if TYPE_CHECKING:
    import numpy.typing as npt

    from hyperfan.models.outerplanar import Triangulation

logger = logging.getLogger("hyperfan")


def _fail(precondition: str, message: str) -> PreconditionError:
    logger.debug(f"Precondition {precondition} failed: {message}")
    return PreconditionError(message, {"precondition": precondition})


def _check_embedding(H: UniformHypergraph, T: Triangulation) -> None:
    if H.edges != to_hypergraph(T).edges:
        msg = "hypergraph is not the triangle set of the triangulation"
        raise _fail("matches_triangulation", msg)


def _walk(n: int, start: int, step: int, stop: int) -> list[int]:
    """Vertices strictly between ``start`` and ``stop`` walking by ``step``."""
    out: list[int] = []
    v = (start + step) % n
    while v != stop:
        out.append(v)
        v = (v + step) % n
    return out


def flip_transform(
    H: UniformHypergraph,
    T: Triangulation,
    v0: int,
    v1: int,
    v2: int,
) -> UniformHypergraph:
    """Reflect the far side of ``v1 v2`` across ``v0 v1`` and hand ``v2``'s hyperedges there to ``v0``.

    Every hyperedge ``{v2, u, w}`` with ``u, w`` on the far side of ``v1 v2``
    (``v1`` included) becomes ``{v0, u, w}``.

    Args:
        H (UniformHypergraph): The triangle hypergraph of ``T``.
        T (Triangulation): Polygon embedding of ``H``.
        v0 (int): The vertex that receives the hyperedges.
        v1 (int): Neighbor of ``v0`` along the polygon.
        v2 (int): The next neighbor of ``v0``, so ``{v0, v1, v2}`` is a hyperedge.

    Returns:
        UniformHypergraph: The transformed hypergraph, with as many hyperedges as ``H``.

    Raises:
        PreconditionError: Names the failing precondition: ``matches_triangulation``,
            ``is_hyperedge``, ``outer_edge_v0v1`` or ``far_side_nonempty``.

    """
    _check_embedding(H, T)
    if not H.has_edge((v0, v1, v2)):
        msg = f"{{{v0}, {v1}, {v2}}} is not a hyperedge"
        raise _fail("is_hyperedge", msg)
    if not T.is_side(v0, v1):
        msg = f"{v0}-{v1} is not an outer edge"
        raise _fail("outer_edge_v0v1", msg)
    far = phi(shadow(H), (v1, v2), v0, triangulation=T)
    if far.is_empty:
        msg = f"nothing lies beyond {v1}-{v2}"
        raise _fail("far_side_nonempty", msg)

    n = H.n
    step = (v1 - v0) % n
    arc = _walk(n, v1, step, v2)
    rest = _walk(n, v2, step, v0)
    side = {*arc, v1}
    edges: list[Edge] = []
    for edge in H.edges:
        if v2 in edge and all(u in side for u in edge if u != v2):
            edge = tuple(sorted(v0 if u == v2 else u for u in edge))  # noqa: PLW2901
        edges.append(edge)
    flipped = UniformHypergraph(n=n, r=3, edges=edges)

    cycle = [v0, *reversed(arc), v1, v2, *rest]
    triangulation_on_cycle(flipped, cycle)
    logger.debug(f"Flipped {len(arc)} far-side vertices of {v1}-{v2} onto {v0}")
    return flipped


def find_flips(T: Triangulation) -> list[tuple[int, int, int]]:
    """All ``(v0, v1, v2)`` accepted by :func:`flip_transform` on ``T``."""
    found: list[tuple[int, int, int]] = []
    diagonals = set(T.diagonals)
    for triangle in T.triangles():
        for v0 in triangle:
            for v1 in triangle:
                if v1 == v0 or not T.is_side(v0, v1):
                    continue
                v2 = next(u for u in triangle if u not in (v0, v1))
                if tuple(sorted((v1, v2))) in diagonals:
                    found.append((v0, v1, v2))
    return sorted(found)


def flip_gain(H: UniformHypergraph, flipped: UniformHypergraph, x: npt.ArrayLike) -> float:
    """``P_{H'}(x) - P_H(x)``, which lower-bounds the radius gain at a unit Perron vector of ``H``."""
    return poly_eval(flipped, x) - poly_eval(H, x)


def leaf_reattach(
    H: UniformHypergraph,
    T: Triangulation,
    leaf: tuple[int, int, int] | Edge,
    v0: int,
    v1: int,
) -> UniformHypergraph:
    """Move an ear ``{w, s, t}`` onto the outer edge ``v0 v1``.

    The leaf hyperedge is removed and ``{w, v0, v1}`` is added; ``w`` leaves
    its place between ``s`` and ``t`` on the outer cycle and is inserted
    between ``v0`` and ``v1``.

    Args:
        H (UniformHypergraph): The triangle hypergraph of ``T``.
        T (Triangulation): Polygon embedding of ``H``.
        leaf (tuple[int, int, int]): A leaf of the dual tree that avoids ``v0``.
        v0 (int): Anchor of the new hyperedge.
        v1 (int): A vertex whose only hyperedge contains ``v0``.

    Returns:
        UniformHypergraph: The transformed hypergraph, with as many hyperedges as ``H``.

    Raises:
        PreconditionError: Names the failing precondition: ``matches_triangulation``,
            ``is_hyperedge``, ``leaf_of_dual_tree``, ``leaf_avoids_v0``,
            ``tip_degree_one`` or ``v1_degree_one``.

    """
    _check_embedding(H, T)
    leaf_edge = tuple(sorted(leaf))
    if not H.has_edge(leaf_edge):
        msg = f"{list(leaf_edge)} is not a hyperedge"
        raise _fail("is_hyperedge", msg)
    tree = dual_tree(T)
    index = tree.nodes.index(leaf_edge)  # type: ignore[arg-type]
    if tree.degree(index) != 1:
        msg = f"{list(leaf_edge)} is not a leaf of the dual tree"
        raise _fail("leaf_of_dual_tree", msg)
    if v0 in leaf_edge:
        msg = f"leaf {list(leaf_edge)} contains {v0}"
        raise _fail("leaf_avoids_v0", msg)
    a, b, c = leaf_edge
    tips = [w for w, s, t in ((a, b, c), (b, a, c), (c, a, b)) if T.is_side(w, s) and T.is_side(w, t)]
    if len(tips) != 1 or H.degree(tips[0]) != 1:
        msg = f"leaf {list(leaf_edge)} has no tip of degree one"
        raise _fail("tip_degree_one", msg)
    w = tips[0]
    if v1 == v0 or H.degree(v1) != 1 or not any(v0 in edge and v1 in edge for edge in H.edges):
        msg = f"{v1} is not in exactly one hyperedge, shared with {v0}"
        raise _fail("v1_degree_one", msg)

    edges = [edge for edge in H.edges if edge != leaf_edge]
    edges.append(tuple(sorted((w, v0, v1))))
    moved = UniformHypergraph(n=H.n, r=3, edges=edges)

    cycle = [v for v in range(H.n) if v != w]
    at = cycle.index(v0)
    after = cycle[(at + 1) % len(cycle)]
    cycle.insert(at + 1 if after == v1 else at, w)
    triangulation_on_cycle(moved, cycle)
    logger.debug(f"Reattached ear tip {w} onto {v0}-{v1}")
    return moved


def find_leaf_reattachments(
    T: Triangulation,
    v0: int | None = None,
) -> list[tuple[tuple[int, int, int], int, int]]:
    """All ``(leaf, v0, v1)`` accepted by :func:`leaf_reattach` on ``T``.

    Args:
        T (Triangulation): The triangulation.
        v0 (int | None): Restrict to this anchor. Defaults to every vertex.

    Returns:
        list[tuple[tuple[int, int, int], int, int]]: Sorted candidates.

    """
    H = to_hypergraph(T)
    tree = dual_tree(T)
    leaves = tree.leaves()
    anchors = range(T.n) if v0 is None else (v0,)
    found: list[tuple[tuple[int, int, int], int, int]] = []
    for anchor in anchors:
        ones = [
            v
            for v in range(T.n)
            if v != anchor and H.degree(v) == 1 and any(anchor in e and v in e for e in H.edges)
        ]
        for leaf in leaves:
            if anchor in leaf:
                continue
            found.extend((leaf, anchor, v) for v in ones)
    return sorted(found)


def entry_swap_check(H: UniformHypergraph, x: npt.ArrayLike, a: int, b: int) -> float:
    """``P_H(x') - P_H(x)`` where ``x'`` swaps the entries at ``a`` and ``b``."""
    vector = np.array(x, dtype=np.float64)
    swapped = vector.copy()
    swapped[[a, b]] = vector[[b, a]]
    return poly_eval(H, swapped) - poly_eval(H, vector)
