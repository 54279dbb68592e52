"""Simplicial complexes with explicit per-dimension face lists.

Faces are vertex bitmasks, stored sorted (integer order, which is
deterministic across runs) one list per dimension.  The empty face is
first-class: a complex always contains it, and the complex {empty} (from a
graph with no vertices) is distinct from having no complex at all.  That
distinction is what makes reduced homology in dimension -1 representable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graphs import Graph, bits


class ComplexError(ValueError):
    """Invalid complex construction or query."""


class SimplicialComplex:
    """Abstract simplicial complex on vertices [0, n).

    ``faces(i)`` returns the i-dimensional faces; dimension -1 is the empty
    face, always present.  Instances are immutable after build.
    """

    __slots__ = ("n_vertices", "_levels", "_index")

    def __init__(self, n_vertices: int, levels: Iterable[Iterable[int]]):
        # levels[k] holds the dimension-k faces (size k+1 bitmasks)
        packed = tuple(tuple(sorted(set(level))) for level in levels)
        while packed and not packed[-1]:
            packed = packed[:-1]
        full = (1 << n_vertices) - 1
        for k, level in enumerate(packed):
            for mask in level:
                if mask & ~full:
                    raise ComplexError(f"face {bin(mask)} outside vertex range")
                if mask.bit_count() != k + 1:
                    raise ComplexError(f"face {bin(mask)} stored at wrong dimension {k}")
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "_levels", packed)
        object.__setattr__(self, "_index", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[int]) -> "SimplicialComplex":
        """Build from arbitrary face masks, closing downward."""
        seen = set()
        stack = list(faces)
        while stack:
            mask = stack.pop()
            if mask in seen:
                continue
            seen.add(mask)
            for v in bits(mask):
                stack.append(mask & ~(1 << v))
        seen.discard(0)
        top = max((m.bit_count() for m in seen), default=0)
        levels: list[list[int]] = [[] for _ in range(top)]
        for mask in seen:
            levels[mask.bit_count() - 1].append(mask)
        return cls(n_vertices, levels)

    @classmethod
    def from_facets(cls, n_vertices: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from maximal faces given as vertex lists."""
        masks = []
        for facet in facets:
            mask = 0
            for v in facet:
                mask |= 1 << v
            masks.append(mask)
        return cls.from_faces(n_vertices, masks)

    # -- queries -----------------------------------------------------------

    @property
    def top_dimension(self) -> int:
        return len(self._levels) - 1

    def faces(self, i: int) -> tuple[int, ...]:
        """Faces of dimension i; (0,) for i = -1; empty outside range."""
        if i == -1:
            return (0,)
        if 0 <= i <= self.top_dimension:
            return self._levels[i]
        return ()

    def face_count(self, i: int) -> int:
        return len(self.faces(i))

    def face_index(self, i: int) -> dict[int, int]:
        index = object.__getattribute__(self, "_index")
        if index is None:
            index = {}
            object.__setattr__(self, "_index", index)
        if i not in index:
            index[i] = {mask: k for k, mask in enumerate(self.faces(i))}
        return index[i]

    def has_face(self, mask: int) -> bool:
        if mask == 0:
            return True
        return mask in self.face_index(mask.bit_count() - 1)

    def all_faces(self) -> Iterator[int]:
        """Every face including the empty one."""
        yield 0
        for level in self._levels:
            yield from level

    def is_downward_closed(self) -> bool:
        for level in self._levels:
            for mask in level:
                for v in bits(mask):
                    if not self.has_face(mask & ~(1 << v)):
                        return False
        return True

    def to_debug_json(self) -> str:
        """JSON dump: dimension -> list of vertex lists."""
        payload = {
            str(i): [list(bits(mask)) for mask in self.faces(i)]
            for i in range(-1, self.top_dimension + 1)
        }
        return json.dumps(payload, sort_keys=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self.n_vertices == other.n_vertices
            and object.__getattribute__(self, "_levels") == object.__getattribute__(other, "_levels")
        )

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n_vertices}, f={f_vector(self)})"


@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse exact-integer matrix; only nonzero entries are stored."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ComplexError(f"entry ({r}, {c}) out of bounds {self.rows}x{self.cols}")
            if v == 0:
                raise ComplexError(f"stored zero at ({r}, {c})")

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "IntegerMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        entries = {
            (r, c): v
            for r, row in enumerate(rows)
            for c, v in enumerate(row)
            if v
        }
        return cls(n_rows, n_cols, entries)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ComplexError(f"shape mismatch: {self.cols} vs {other.rows}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc.get(key, 0) + v * w
        entries = {key: v for key, v in acc.items() if v}
        return IntegerMatrix(self.rows, other.cols, entries)

    def is_zero(self) -> bool:
        return not self.entries


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex whose faces are exactly the independent sets of g."""
    levels: list[list[int]] = []
    current = [0]
    while True:
        nxt = []
        for mask in current:
            start = mask.bit_length()  # extend above the largest member
            for v in range(start, g.n):
                if not g.adj[v] & mask:
                    nxt.append(mask | 1 << v)
        if not nxt:
            break
        levels.append(nxt)
        current = nxt
    return SimplicialComplex(g.n, levels)


def f_vector(k: SimplicialComplex) -> list[int]:
    """Face counts by dimension, empty face excluded: [f_0, ..., f_top]."""
    return [k.face_count(i) for i in range(k.top_dimension + 1)]


def boundary_matrix(k: SimplicialComplex, i: int) -> IntegerMatrix:
    """The boundary operator from i-chains to (i-1)-chains.

    Rows are indexed by (i-1)-faces, columns by i-faces; the entry for
    dropping the j-th smallest vertex of a face is (-1)^j.  i = 0 is the
    augmentation onto the empty face.  Out-of-range i yields an empty
    matrix of the dimensionally correct shape.
    """
    n_rows = k.face_count(i - 1)
    n_cols = k.face_count(i)
    entries: dict[tuple[int, int], int] = {}
    if i == 0:
        for c in range(n_cols):
            entries[(0, c)] = 1
    elif i >= 1:
        row_index = k.face_index(i - 1)
        for c, mask in enumerate(k.faces(i)):
            for j, v in enumerate(bits(mask)):
                entries[(row_index[mask & ~(1 << v)], c)] = -1 if j & 1 else 1
    return IntegerMatrix(n_rows, n_cols, entries)


def face_euler(k: SimplicialComplex) -> int:
    """Reduced Euler characteristic from face counts: sum (-1)^i f_i - 1."""
    total = -1
    for i, f in enumerate(f_vector(k)):
        total += -f if i & 1 else f
    return total
