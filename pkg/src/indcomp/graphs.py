"""Undirected graphs on vertex sets [0, n) with bitmask adjacency rows.

Vertex sets throughout the package are plain ints used as bitmasks, which
keeps neighborhood algebra (unions, deletions, independence tests) at O(1)
word operations.  Graphs are capped at 64 vertices; exhaustive verification
never needs more, and the cap keeps masks inside one machine word on CPython.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph structure or operation argument."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """Simple undirected graph: no loops, no multiple edges.

    ``adj[v]`` is the bitmask of neighbors of ``v``.  Instances are immutable
    after construction and safe to share across workers.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} references vertices >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def cycle(cls, length: int) -> "Graph":
        if length < 3:
            raise GraphError(f"cycle length {length} < 3")
        return cls.from_edges(length, [(i, (i + 1) % length) for i in range(length)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1) << (v + 1)
            out.extend((v, u) for u in bits(higher))
        return out

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = N(v) plus v itself, as a bitmask."""
        self._check_vertex(v)
        return self.adj[v] | 1 << v

    def closed_neighborhood_of_set(self, mask: int) -> int:
        """Union of N[w] over the vertices w in ``mask``."""
        self._check_mask(mask)
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def is_independent(self, mask: int) -> bool:
        self._check_mask(mask)
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def isolated_vertices(self) -> int:
        """Bitmask of degree-0 vertices."""
        out = 0
        for v, row in enumerate(self.adj):
            if not row:
                out |= 1 << v
        return out

    # -- derived graphs ----------------------------------------------------

    def induced(self, mask: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``mask``, compacted to indices [0, k).

        Returns the subgraph and the map from new indices to original
        vertices.
        """
        self._check_mask(mask)
        keep = tuple(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v] & mask):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(keep), rows), keep

    def add_vertex(self, neighbors: int = 0) -> "Graph":
        """New graph with one extra vertex ``n`` adjacent to ``neighbors``."""
        self._check_mask(neighbors)
        bit = 1 << self.n
        rows = [row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj)]
        rows.append(neighbors)
        return Graph(self.n + 1, rows)

    # -- plumbing ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def _check_mask(self, mask: int) -> None:
        if mask & ~self.vertex_mask:
            raise GraphError(f"vertex set {bin(mask)} not within [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def residual(g: Graph, x: int, y: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on V - N[X] - Y, compacted, with its index map.

    ``x`` must be independent and disjoint from ``y``; the construction is
    only meaningful under those conditions and they are enforced here.
    """
    g._check_mask(x)
    g._check_mask(y)
    if x & y:
        raise GraphError("x and y overlap")
    if not g.is_independent(x):
        raise GraphError("x is not an independent set")
    keep = g.vertex_mask & ~g.closed_neighborhood_of_set(x) & ~y
    return g.induced(keep)
