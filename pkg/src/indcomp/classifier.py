"""Homotopy-type classification of independence complexes of ternary graphs.

The recursion works on d-values: the sphere dimension of the independence
complex of a residual graph, or star when that complex is contractible.
Removing a vertex v splits a graph into the two residuals G - N[v] and
G - v; for ternary inputs the pair of their d-values determines the
d-value of G itself by the combine table below.  A pair of distinct finite
dimensions can never arise from a ternary graph, so observing one is a
certificate that the input was not ternary.

Results are memoized on the canonical graph6 form of each residual, so
isomorphic residuals reached along different branches are computed once.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Callable

from .enumeration import refined_canonical_graph6
from .graphs import Graph, GraphError, residual


class _Star:
    """Marker for 'contractible' in the d-value algebra (printed as *)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "*"


STAR = _Star()

DValue = int | _Star


@dataclass(frozen=True)
class NonTernarySignal:
    """Two distinct finite d-values met; impossible for ternary graphs."""

    removed_neighborhood: int  # d-value of G - N[v]
    removed_vertex: int  # d-value of G - v


class NonTernaryDetected(GraphError):
    """classify() hit a forbidden d-value pair, so the input is not ternary.

    Carries the residual graph (as graph6) where the pair arose; this is a
    debugging aid, not an induced-cycle witness.
    """

    def __init__(self, graph6: str, signal: NonTernarySignal):
        super().__init__(
            f"forbidden d-value pair ({signal.removed_neighborhood}, "
            f"{signal.removed_vertex}) at residual {graph6!r}: input is not ternary"
        )
        self.graph6 = graph6
        self.signal = signal


@dataclass(frozen=True)
class HomotopyClass:
    """Contractible, or a sphere of the given dimension (>= -1)."""

    sphere_dim: int | None = None

    def __post_init__(self):
        if self.sphere_dim is not None and self.sphere_dim < -1:
            raise ValueError(f"sphere dimension {self.sphere_dim} < -1")

    @property
    def is_contractible(self) -> bool:
        return self.sphere_dim is None

    def __str__(self) -> str:
        return "contractible" if self.sphere_dim is None else f"S^{self.sphere_dim}"


CONTRACTIBLE = HomotopyClass()


def sphere(d: int) -> HomotopyClass:
    return HomotopyClass(d)


@dataclass(frozen=True)
class WedgeOfTwoSpheres:
    """One-point union of two d-spheres; total Betti number 2."""

    dim: int

    def __str__(self) -> str:
        return f"S^{self.dim} v S^{self.dim}"


def combine(a: DValue, b: DValue) -> "DValue | NonTernarySignal":
    """d-value of a graph from those of its two vertex-removal residuals.

    ``a`` is the d-value of G - N[v], ``b`` that of G - v:

        (*, *) -> *          (k, *) -> k + 1
        (*, k) -> k          (k, k) -> *

    Distinct finite dimensions return a NonTernarySignal.
    """
    a_star = a is STAR
    b_star = b is STAR
    if a_star and b_star:
        return STAR
    if a_star:
        return b
    if b_star:
        return a + 1
    if a == b:
        return STAR
    return NonTernarySignal(a, b)


def select_pivot(g: Graph) -> int:
    """Vertex of maximum degree, ties broken by least index.

    Removing N[v] for a high-degree v shrinks that branch fastest; the
    recursion's answer does not depend on the choice.
    """
    if g.n == 0:
        raise GraphError("empty graph has no pivot")
    best = 0
    best_degree = g.adj[0].bit_count()
    for v in range(1, g.n):
        d = g.adj[v].bit_count()
        if d > best_degree:
            best, best_degree = v, d
    return best


class Classifier:
    """Memoized homotopy-type classification for ternary graphs.

    The cache maps canonical graph6 keys of residual graphs to d-values and
    is bounded by LRU eviction.  A lock keeps concurrent lookups and inserts
    consistent; classifications are deterministic either way.
    """

    def __init__(
        self,
        max_cache_entries: int = 1 << 20,
        pivot: Callable[[Graph], int] = select_pivot,
    ):
        if max_cache_entries < 1:
            raise ValueError("cache must allow at least one entry")
        self.max_cache_entries = max_cache_entries
        self.pivot = pivot
        self._cache: OrderedDict[str, DValue] = OrderedDict()
        self._lock = threading.Lock()

    @property
    def cache_size(self) -> int:
        return len(self._cache)

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()

    def classify(self, g: Graph) -> HomotopyClass:
        d = self._d_value(g)
        return CONTRACTIBLE if d is STAR else HomotopyClass(d)

    def _d_value(self, g: Graph) -> DValue:
        if g.n == 0:
            return -1
        if g.isolated_vertices():
            # the complex is a cone over any isolated vertex
            return STAR
        key = refined_canonical_graph6(g)
        with self._lock:
            cached = self._cache.get(key)
            if cached is not None:
                self._cache.move_to_end(key)
                return cached

        v = self.pivot(g)
        minus_closed, _ = residual(g, 1 << v, 0)
        minus_vertex, _ = residual(g, 0, 1 << v)
        result = combine(self._d_value(minus_closed), self._d_value(minus_vertex))
        if isinstance(result, NonTernarySignal):
            raise NonTernaryDetected(key, result)

        with self._lock:
            self._cache[key] = result
            self._cache.move_to_end(key)
            while len(self._cache) > self.max_cache_entries:
                self._cache.popitem(last=False)
        return result


_default_classifier = Classifier()


def classify(g: Graph, classifier: Classifier | None = None) -> HomotopyClass:
    """Exact homotopy class of the independence complex of a ternary graph.

    Correct for every ternary input; raises NonTernaryDetected when the
    recursion certifies the input non-ternary (absence of that signal does
    not certify ternarity).
    """
    return (classifier or _default_classifier).classify(g)


def cycle_homotopy_type(length: int) -> "HomotopyClass | WedgeOfTwoSpheres":
    """Closed-form homotopy type of the independence complex of a cycle.

    For length 3k+3 it is a wedge of two k-spheres; for 3k+2 or 3k+4 it is
    a single k-sphere.
    """
    if length < 3:
        raise ValueError(f"cycle length {length} < 3")
    r = length % 3
    if r == 0:
        return WedgeOfTwoSpheres(length // 3 - 1)
    if r == 2:
        return HomotopyClass((length - 2) // 3)
    return HomotopyClass((length - 4) // 3)
