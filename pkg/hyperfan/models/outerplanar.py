from __future__ import annotations
from enum import Enum
from typing import Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from typing_extensions import Self

from hyperfan.exceptions import InvalidHypergraphError, ParseError

from .hypergraph import Pair, pair

Triangle = tuple[int, int, int]


def crosses(a: Pair, b: Pair) -> bool:
    """Whether two chords of the convex polygon cross in their interiors."""
    (p, q), (s, t) = a, b
    return p < s < q < t or s < p < t < q


class Triangulation(BaseModel):
    """A triangulation of the convex polygon ``0..n-1``, stored as its diagonals.

    The polygon sides ``{i, i+1}`` and ``{0, n-1}`` are implicit; ``diagonals``
    holds the ``n - 3`` non-crossing chords as ascending pairs in sorted order.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3, description="Polygon size")
    diagonals: tuple[Pair, ...] = Field(
        default=(),
        description="Sorted non-crossing chords of the polygon",
    )

    @model_validator(mode="after")
    def _check_diagonals(self) -> Self:
        if list(self.diagonals) != sorted({pair(*d) for d in self.diagonals}):
            msg = "diagonals must be unique ascending pairs in sorted order"
            raise ValueError(msg)
        if len(self.diagonals) != self.n - 3:
            msg = f"expected {self.n - 3} diagonals, got {len(self.diagonals)}"
            raise ValueError(msg)
        for a, b in self.diagonals:
            if a < 0 or b >= self.n:
                msg = f"diagonal {a}-{b} leaves the polygon"
                raise ValueError(msg)
            if self.is_side(a, b):
                msg = f"{a}-{b} is a polygon side, not a diagonal"
                raise ValueError(msg)
        for i, d in enumerate(self.diagonals):
            for e in self.diagonals[i + 1 :]:
                if crosses(d, e):
                    msg = f"diagonals {d[0]}-{d[1]} and {e[0]}-{e[1]} cross"
                    raise ValueError(msg)
        return self

    @classmethod
    def from_diagonals(cls, n: int, diagonals: list[Pair] | tuple[Pair, ...]) -> Triangulation:
        """Build a triangulation from diagonals in any order or orientation.

        Args:
            n (int): Polygon size.
            diagonals (list[Pair] | tuple[Pair, ...]): The chords.

        Returns:
            Triangulation: The validated triangulation.

        Raises:
            InvalidHypergraphError: If the chords do not triangulate the polygon.

        """
        try:
            return cls(n=n, diagonals=tuple(sorted(pair(a, b) for a, b in diagonals)))
        except ValidationError as e:
            raise InvalidHypergraphError(
                "; ".join(str(err["msg"]) for err in e.errors()),
                {"n": n, "diagonals": [list(d) for d in diagonals]},
            ) from e

    @classmethod
    def from_text(cls, text: str) -> Triangulation:
        """Parse the ``n; a-b, c-d, ...`` text form.

        Raises:
            ParseError: If the text is malformed.
            InvalidHypergraphError: If the chords do not triangulate the polygon.

        """
        head, sep, tail = text.strip().partition(";")
        if not sep:
            msg = f"missing ';' in triangulation {text!r}"
            raise ParseError(msg, {"field": "triangulation"})
        try:
            n = int(head)
            diagonals = [
                pair(*(int(v) for v in chunk.split("-", 1)))  # type: ignore[misc]
                for chunk in (part.strip() for part in tail.split(","))
                if chunk
            ]
        except (TypeError, ValueError) as e:
            msg = f"malformed triangulation {text!r}"
            raise ParseError(msg, {"field": "triangulation"}) from e
        return cls.from_diagonals(n, diagonals)

    def to_text(self) -> str:
        """Render as ``n; a-b, c-d, ...``, or ``n;`` when there is no diagonal."""
        if not self.diagonals:
            return f"{self.n};"
        return f"{self.n}; " + ", ".join(f"{a}-{b}" for a, b in self.diagonals)

    def is_side(self, a: int, b: int) -> bool:
        """Whether ``{a, b}`` is a side of the polygon."""
        a, b = pair(a, b)
        return b - a == 1 or (a == 0 and b == self.n - 1)

    def chords(self) -> frozenset[Pair]:
        """Sides and diagonals together."""
        sides = {pair(i, (i + 1) % self.n) for i in range(self.n)}
        return frozenset(sides | set(self.diagonals))

    def triangles(self) -> list[Triangle]:
        """The ``n - 2`` triangles, each ascending, in sorted order."""
        chords = self.chords()
        found: list[Triangle] = []
        stack = [(0, self.n - 1)]
        while stack:
            i, j = stack.pop()
            if j - i < 2:
                continue
            # exactly one apex closes the triangle over the chord i-j
            k = next(k for k in range(i + 1, j) if (i, k) in chords and (k, j) in chords)
            found.append((i, k, j))
            stack.extend(((i, k), (k, j)))
        return sorted(found)


class DualTree(BaseModel):
    """Adjacency tree of the triangles of a triangulation across shared diagonals."""

    model_config = ConfigDict(frozen=True)

    nodes: tuple[Triangle, ...] = Field(..., description="The triangles, sorted")
    links: tuple[Pair, ...] = Field(
        default=(),
        description="Index pairs of triangles sharing a diagonal",
    )

    @model_validator(mode="after")
    def _check_tree(self) -> Self:
        if not nx.is_tree(self.to_networkx()):
            msg = "dual graph is not a tree"
            raise ValueError(msg)
        return self

    def to_networkx(self) -> nx.Graph:  # type: ignore[type-arg]
        """Convert to a ``networkx.Graph`` on node indices."""
        graph: nx.Graph = nx.Graph()  # type: ignore[type-arg]
        graph.add_nodes_from(range(len(self.nodes)))
        graph.add_edges_from(self.links)
        return graph

    def degree(self, i: int) -> int:
        """Number of links at node ``i``."""
        return sum(1 for link in self.links if i in link)

    def leaves(self) -> list[Triangle]:
        """Triangles with exactly one neighbor (the ears)."""
        return [node for i, node in enumerate(self.nodes) if self.degree(i) == 1]

    def is_path(self) -> bool:
        """Whether no triangle has more than two neighbors."""
        return all(self.degree(i) <= 2 for i in range(len(self.nodes)))


class EmbeddingFailure(str, Enum):
    """Why a hypergraph failed the outerplanarity test."""

    SHADOW_NOT_OUTERPLANAR = "shadow_not_outerplanar"
    HYPEREDGE_NOT_FACE = "hyperedge_not_face"


class EmbeddingReport(BaseModel):
    """Result of the outerplanarity test.

    ``outer_cycle`` is the cyclic order of the vertices around the outer
    face, started at the smallest vertex and oriented so that its second
    entry is smaller than its last. For a 2-connected shadow it is the outer
    Hamilton cycle.
    """

    model_config = ConfigDict(frozen=True)

    ok: bool = Field(..., description="Whether the hypergraph is outerplanar")
    outer_cycle: Optional[tuple[int, ...]] = Field(
        default=None,
        description="Cyclic vertex order around the outer face when ok",
    )
    failure_reason: Optional[EmbeddingFailure] = Field(
        default=None,
        description="Enumerated cause when not ok",
    )

    @model_validator(mode="after")
    def _check_consistent(self) -> Self:
        if self.ok and self.failure_reason is not None:
            msg = "a passing report carries no failure reason"
            raise ValueError(msg)
        if not self.ok and self.failure_reason is None:
            msg = "a failing report needs a failure reason"
            raise ValueError(msg)
        return self
